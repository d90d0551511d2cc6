use alt_core::calibration::{compare, fit_plane};
use alt_core::metrics::{convert_flesch_to_grade, eval_formula, Variable};
use alt_core::{
    mean_diff_band, pearson, student_t_p_value, CalibrationSample, Formula, Profile, TextStats,
};
use proptest::prelude::*;

fn stats(ws: f64, sw: f64, lw: f64, cw: f64, pw: f64) -> TextStats {
    TextStats {
        words_per_sentence: ws,
        sentences_per_word: 1.0 / ws,
        syllables_per_word: sw,
        letters_per_word: lw,
        complex_word_ratio: cw,
        polysyllabic_ratio: pw,
        ..TextStats::default()
    }
}

fn any_stats() -> impl Strategy<Value = TextStats> {
    (
        1.0f64..80.0,
        1.0f64..3.5,
        2.0f64..9.0,
        0.0f64..1.0,
        0.0f64..1.0,
    )
        .prop_map(|(a, b, c, d, e)| stats(a, b, c, d, e))
}

fn profile() -> impl Strategy<Value = Profile> {
    prop::sample::select(vec![Profile::Original, Profile::AdaptedPt])
}

/// Student t density integrated from |t| outward by composite Simpson on the
/// substitution u = 1/(1+s), which maps [|t|, inf) to (0, 1/(1+|t|)].
fn t_tail_quadrature(t: f64, dof: f64) -> f64 {
    let ln_c = lanczos_lgamma((dof + 1.0) / 2.0)
        - lanczos_lgamma(dof / 2.0)
        - 0.5 * (dof * std::f64::consts::PI).ln();
    let density = |s: f64| (ln_c - (dof + 1.0) / 2.0 * (1.0 + s * s / dof).ln()).exp();
    let upper = 1.0 / (1.0 + t.abs());
    // near u = 0 the integrand behaves like u^(dof - 1)
    let g = |u: f64| {
        if u <= 0.0 {
            if dof == 1.0 {
                ln_c.exp()
            } else {
                0.0
            }
        } else {
            let s = 1.0 / u - 1.0;
            density(s) / (u * u)
        }
    };
    let n = 20_000;
    let h = upper / n as f64;
    let mut sum = g(0.0) + g(upper);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * g(i as f64 * h);
    }
    2.0 * sum * h / 3.0
}

/// Lanczos approximation, independent of the crate's own gamma.
fn lanczos_lgamma(x: f64) -> f64 {
    const G: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    let x = x - 1.0;
    let mut a = G[0];
    let t = x + 7.5;
    for (i, g) in G.iter().enumerate().skip(1) {
        a += g / (x + i as f64);
    }
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + a.ln()
}

#[test]
fn quadrature_oracle_sanity() {
    assert!((t_tail_quadrature(2.0, 10.0) - 0.0734).abs() < 1e-4);
    assert!((student_t_p_value(2.0, 10.0).unwrap() - 0.0734).abs() < 1e-4);
}

proptest! {
    #[test]
    fn formulas_are_affine(profile in profile(), a in any_stats(), b in any_stats()) {
        for formula in Formula::ALL {
            let plane = profile.plane(formula);
            let lhs = eval_formula(profile, formula, &a) - eval_formula(profile, formula, &b);
            let rhs = plane.c2 * (plane.x.value(&a) - plane.x.value(&b))
                + plane.c3 * (plane.y.value(&a) - plane.y.value(&b));
            prop_assert!((lhs - rhs).abs() < 1e-9);
        }
    }

    #[test]
    fn longer_sentences_read_harder(s in any_stats(), dw in 0.5f64..20.0) {
        let mut t = s;
        t.words_per_sentence += dw;
        for profile in [Profile::Original, Profile::AdaptedPt] {
            for formula in [Formula::FleschKincaid, Formula::GunningFog, Formula::Ari] {
                prop_assert!(eval_formula(profile, formula, &t) > eval_formula(profile, formula, &s));
            }
        }
        prop_assert!(
            eval_formula(Profile::AdaptedPt, Formula::Flesch, &t)
                < eval_formula(Profile::AdaptedPt, Formula::Flesch, &s)
        );
    }

    #[test]
    fn flesch_conversion_tracks_grade(ws in 1.0f64..60.0, sw in 0.5f64..2.0) {
        let s = stats(ws, sw, 4.0, 0.1, 0.1);
        let flesch = eval_formula(Profile::Original, Formula::Flesch, &s);
        let fk = eval_formula(Profile::Original, Formula::FleschKincaid, &s);
        prop_assert!((convert_flesch_to_grade(flesch, sw) - fk).abs() < 1e-2);
    }

    #[test]
    fn gulpease_shared(s in any_stats()) {
        prop_assert_eq!(
            eval_formula(Profile::Original, Formula::Gulpease, &s),
            eval_formula(Profile::AdaptedPt, Formula::Gulpease, &s)
        );
        prop_assert_eq!(Variable::LettersPerWord.value(&s), s.letters_per_word);
    }

    #[test]
    fn residuals_orthogonal(
        rows in prop::collection::vec((-10.0f64..10.0, 0.0f64..5.0, -50.0f64..50.0), 6..60)
    ) {
        let sample = CalibrationSample::from_triples(rows.clone());
        if let Ok(fit) = fit_plane(&sample) {
            let scale = rows.iter().map(|r| r.2.abs()).fold(1.0, f64::max);
            let e = &fit.residuals;
            let s0: f64 = e.iter().sum();
            let sx: f64 = e.iter().zip(&rows).map(|(e, r)| e * r.0).sum();
            let sy: f64 = e.iter().zip(&rows).map(|(e, r)| e * r.1).sum();
            for s in [s0, sx, sy] {
                prop_assert!(s.abs() < 1e-6 * scale * rows.len() as f64, "{}", s);
            }
            prop_assert!((0.0..=1.0).contains(&fit.r2));
            prop_assert!(fit.p_values.iter().all(|p| (0.0..=1.0).contains(p)));
        }
    }

    #[test]
    fn pearson_affine(
        pairs in prop::collection::vec((-100.0f64..100.0, -100.0f64..100.0), 3..40),
        scale in 0.1f64..10.0,
        shift in -50.0f64..50.0,
    ) {
        let a: Vec<f64> = pairs.iter().map(|p| p.0).collect();
        let b: Vec<f64> = pairs.iter().map(|p| p.1).collect();
        if let Ok(r) = pearson(&a, &b) {
            let pos: Vec<f64> = a.iter().map(|v| v * scale + shift).collect();
            let neg: Vec<f64> = a.iter().map(|v| -v * scale + shift).collect();
            prop_assert!((pearson(&pos, &b).unwrap() - r).abs() < 1e-9);
            prop_assert!((pearson(&neg, &b).unwrap() + r).abs() < 1e-9);
            prop_assert!((pearson(&b, &pos).unwrap() - r).abs() < 1e-9);
        }
    }

    #[test]
    fn mean_diff_antisymmetric(
        pairs in prop::collection::vec((-100.0f64..100.0, -100.0f64..100.0), 2..40)
    ) {
        let a: Vec<f64> = pairs.iter().map(|p| p.0).collect();
        let b: Vec<f64> = pairs.iter().map(|p| p.1).collect();
        let ab = mean_diff_band(&a, &b).unwrap();
        let ba = mean_diff_band(&b, &a).unwrap();
        prop_assert!((ab.mean_diff + ba.mean_diff).abs() < 1e-12);
        prop_assert!((ab.half_width - ba.half_width).abs() < 1e-9);
        if let Ok(stats) = compare(&a, &b) {
            prop_assert_eq!(stats.mean_diff, ab.mean_diff);
        }
    }

    #[test]
    fn t_p_value_matches_quadrature(t in -6.0f64..6.0, dof in 1usize..60) {
        let got = student_t_p_value(t, dof as f64).unwrap();
        let want = t_tail_quadrature(t, dof as f64);
        prop_assert!((got - want).abs() < 1e-6, "t={} dof={} got={} want={}", t, dof, got, want);
    }
}
