//! Globally adaptive 15-point Gauss–Kronrod quadrature on a finite interval.
//!
//! The interval with the largest error estimate is bisected until the summed
//! error estimate drops below `rel_tol * |value|` or the evaluation budget is
//! spent. Error estimates follow QUADPACK's `qk15`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::{Error, Result};

pub const DEFAULT_MAX_EVALUATIONS: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

#[derive(Clone, Copy, Debug)]
struct Segment {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 {
            res_asc * scale
        } else {
            res_asc
        };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        scaled = scaled.max(50.0 * f64::EPSILON * res_abs);
    }
    scaled
}

fn gauss_kronrod_15<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Segment {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);
    let mut res_g = fc * WG[3];
    let mut res_k = fc * WGK[7];
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];

    for j in 0..3 {
        let idx = 2 * j + 1;
        let dx = half * XGK[idx];
        let (f1, f2) = (f(center - dx), f(center + dx));
        fv1[idx] = f1;
        fv2[idx] = f2;
        res_g += WG[j] * (f1 + f2);
        res_k += WGK[idx] * (f1 + f2);
        res_abs += WGK[idx] * (f1.abs() + f2.abs());
    }
    for j in 0..4 {
        let idx = 2 * j;
        let dx = half * XGK[idx];
        let (f1, f2) = (f(center - dx), f(center + dx));
        fv1[idx] = f1;
        fv2[idx] = f2;
        res_k += WGK[idx] * (f1 + f2);
        res_abs += WGK[idx] * (f1.abs() + f2.abs());
    }

    let mean = 0.5 * res_k;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let scale = half.abs();
    Segment {
        lo,
        hi,
        value: res_k * half,
        error: rescale_error((res_k - res_g) * half, res_abs * scale, res_asc * scale),
    }
}

/// Integrates `f` over `[lo, hi]` to relative accuracy `rel_tol`.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    rel_tol: f64,
    max_evaluations: usize,
) -> Result<QuadratureResult> {
    if rel_tol.is_nan() || rel_tol <= 0.0 {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {rel_tol}"
        )));
    }
    let first = gauss_kronrod_15(&f, lo, hi);
    if !first.value.is_finite() {
        return Err(Error::Domain(format!(
            "integrand is not finite on [{lo}, {hi}]"
        )));
    }
    let mut evaluations = 15;
    let mut value = first.value;
    let mut error = first.error;
    let mut heap = BinaryHeap::from([first]);

    while error > rel_tol * value.abs() && error > 0.0 {
        if evaluations + 30 > max_evaluations {
            return Err(Error::QuadratureNonConvergence {
                value,
                abs_error: error,
                evaluations,
            });
        }
        let worst = heap.pop().expect("heap never empties");
        let mid = 0.5 * (worst.lo + worst.hi);
        let left = gauss_kronrod_15(&f, worst.lo, mid);
        let right = gauss_kronrod_15(&f, mid, worst.hi);
        evaluations += 30;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        // Running sums drift; resync now and then.
        if heap.len() % 64 == 0 {
            value = heap.iter().map(|s| s.value).sum();
            error = heap.iter().map(|s| s.error).sum();
        }
    }

    Ok(QuadratureResult {
        value,
        abs_error_estimate: error.max(0.0),
        evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn polynomial_is_exact_in_one_pass() {
        let r = integrate(|x| x.powi(6) - 2.0 * x, 0.0, 2.0, 1e-12, 1000).unwrap();
        assert!((r.value - (128.0 / 7.0 - 4.0)).abs() < 1e-12);
        assert_eq!(r.evaluations, 15);
    }

    #[test]
    fn peaked_integrand_needs_refinement() {
        // int_{-1}^{1} 1/(1e-4 + x^2) dx = 2 * 100 * atan(100)
        let r = integrate(|x| 1.0 / (1e-4 + x * x), -1.0, 1.0, 1e-12, 1_000_000).unwrap();
        let exact = 200.0 * 100f64.atan();
        assert!((r.value / exact - 1.0).abs() < 1e-11, "{r:?}");
        assert!(r.evaluations > 15);
        assert!(r.abs_error_estimate >= 0.0);
    }

    #[test]
    fn budget_exhaustion_reports_estimate() {
        let err =
            integrate(|x| (x - 0.3f64).abs().sqrt().recip(), 0.0, 1.0, 1e-14, 200).unwrap_err();
        match err {
            Error::QuadratureNonConvergence { evaluations, .. } => assert!(evaluations <= 200),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_non_finite_integrand() {
        assert!(matches!(
            integrate(|x| x.abs().sqrt().recip(), -1.0, 1.0, 1e-10, 1000),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn rejects_bad_tolerance() {
        assert!(integrate(|x| x, 0.0, 1.0, 0.0, 100).is_err());
        assert!(integrate(|x| x, 0.0, 1.0, f64::NAN, 100).is_err());
    }

    #[test]
    fn tan_substitution_cauchy() {
        // int 1/(1+y^2) dy over R after y = tan(t) is int 1 dt over (-pi/2, pi/2)
        let r = integrate(|_| 1.0, -PI / 2.0, PI / 2.0, 1e-12, 100).unwrap();
        assert!((r.value - PI).abs() < 1e-14);
    }
}
