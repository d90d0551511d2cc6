use super::CalibrationError;

const MAX_ITER: usize = 300;
const EPS: f64 = 1e-15;
const TINY: f64 = 1e-300;

/// Continued fraction for the incomplete beta function (modified Lentz).
fn beta_cf(a: f64, b: f64, x: f64) -> f64 {
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=MAX_ITER {
        let m = m as f64;
        let m2 = 2.0 * m;
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < EPS {
            break;
        }
    }
    h
}

/// Regularized incomplete beta `I_x(a, b)` for `a, b > 0`, `0 <= x <= 1`.
pub fn regularized_incomplete_beta(a: f64, b: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let ln_front = libm::lgamma(a + b) - libm::lgamma(a) - libm::lgamma(b)
        + a * libm::log(x)
        + b * libm::log1p(-x);
    let front = libm::exp(ln_front);
    // The continued fraction converges fast for x < (a+1)/(a+b+2); use the
    // symmetry I_x(a,b) = 1 - I_{1-x}(b,a) on the other side.
    if x < (a + 1.0) / (a + b + 2.0) {
        front * beta_cf(a, b, x) / a
    } else {
        1.0 - front * beta_cf(b, a, 1.0 - x) / b
    }
}

/// Two-sided tail probability `P(|T| >= |t|)` of Student's t with `dof`
/// degrees of freedom.
pub fn student_t_p_value(t: f64, dof: f64) -> Result<f64, CalibrationError> {
    if dof < 1.0 || !dof.is_finite() {
        return Err(CalibrationError::InvalidDof);
    }
    if t.is_nan() {
        return Err(CalibrationError::NonFinite);
    }
    if t.is_infinite() {
        return Ok(0.0);
    }
    let x = dof / (dof + t * t);
    Ok(regularized_incomplete_beta(dof / 2.0, 0.5, x).clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn center_and_tails() {
        assert_eq!(student_t_p_value(0.0, 5.0).unwrap(), 1.0);
        assert_eq!(student_t_p_value(f64::INFINITY, 5.0).unwrap(), 0.0);
        assert!(student_t_p_value(1e6, 5.0).unwrap() < 1e-12);
        assert_eq!(
            student_t_p_value(1.0, 0.0),
            Err(CalibrationError::InvalidDof)
        );
    }

    #[test]
    fn symmetric_in_t() {
        for t in [0.3, 1.7, 4.2] {
            let a = student_t_p_value(t, 7.0).unwrap();
            let b = student_t_p_value(-t, 7.0).unwrap();
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn cauchy_closed_form() {
        // dof = 1 is the Cauchy distribution: p = 1 - 2 atan(t) / pi.
        for t in [0.5, 1.0, 3.0, 10.0] {
            let want = 1.0 - 2.0 * libm::atan(t) / core::f64::consts::PI;
            let got = student_t_p_value(t, 1.0).unwrap();
            assert!((got - want).abs() < 1e-12, "{t}: {got} vs {want}");
        }
    }

    #[test]
    fn incomplete_beta_edges() {
        assert_eq!(regularized_incomplete_beta(2.0, 3.0, 0.0), 0.0);
        assert_eq!(regularized_incomplete_beta(2.0, 3.0, 1.0), 1.0);
        // I_x(1, 1) = x
        assert!((regularized_incomplete_beta(1.0, 1.0, 0.37) - 0.37).abs() < 1e-14);
    }
}
