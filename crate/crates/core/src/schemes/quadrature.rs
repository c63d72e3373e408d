//! Gauss-Legendre quadrature on the reference interval [0, 1].

use crate::error::Error;
use crate::scalar::Scalar;
use crate::Result;

/// Nodes and weights on [-1, 1] for the supported rule sizes.
const GAUSS_2: [(f64, f64); 1] = [(0.577_350_269_189_625_8, 1.0)];
const GAUSS_4: [(f64, f64); 2] = [
    (0.339_981_043_584_856_3, 0.652_145_154_862_546_1),
    (0.861_136_311_594_052_6, 0.347_854_845_137_453_85),
];
const GAUSS_6: [(f64, f64); 3] = [
    (0.238_619_186_083_196_9, 0.467_913_934_572_691_04),
    (0.661_209_386_466_264_5, 0.360_761_573_048_138_6),
    (0.932_469_514_203_152_1, 0.171_324_492_379_170_36),
];
const GAUSS_8: [(f64, f64); 4] = [
    (0.183_434_642_495_649_8, 0.362_683_783_378_362_0),
    (0.525_532_409_916_329_0, 0.313_706_645_877_887_3),
    (0.796_666_477_413_626_7, 0.222_381_034_453_374_5),
    (0.960_289_856_497_536_3, 0.101_228_536_290_376_3),
];
const GAUSS_10: [(f64, f64); 5] = [
    (0.148_874_338_981_631_2, 0.295_524_224_714_752_9),
    (0.433_395_394_129_247_2, 0.269_266_719_309_996_3),
    (0.679_409_568_299_024_4, 0.219_086_362_515_982_0),
    (0.865_063_366_688_984_5, 0.149_451_349_150_580_6),
    (0.973_906_528_517_171_7, 0.066_671_344_308_688_1),
];
const GAUSS_12: [(f64, f64); 6] = [
    (0.125_233_408_511_468_9, 0.249_147_045_813_402_8),
    (0.367_831_498_998_180_2, 0.233_492_536_538_354_8),
    (0.587_317_954_286_617_5, 0.203_167_426_723_065_9),
    (0.769_902_674_194_304_7, 0.160_078_328_543_346_2),
    (0.904_117_256_370_474_9, 0.106_939_325_995_318_4),
    (0.981_560_634_246_719_2, 0.047_175_336_386_511_8),
];

/// Gauss-Legendre rule with `n` points, mapped to [0, 1].
///
/// Exact for polynomials of degree `2n - 1`. Supported sizes: 2, 4, 6, 8,
/// 10, 12.
pub fn gauss_unit<S: Scalar>(n: usize) -> Result<Vec<(S, S)>> {
    let half: &[(f64, f64)] = match n {
        2 => &GAUSS_2,
        4 => &GAUSS_4,
        6 => &GAUSS_6,
        8 => &GAUSS_8,
        10 => &GAUSS_10,
        12 => &GAUSS_12,
        _ => {
            return Err(Error::InvalidConfig(format!(
                "unsupported quadrature size {n}; use 2, 4, 6, 8, 10, or 12"
            )))
        }
    };
    let mut rule = Vec::with_capacity(n);
    for &(x, w) in half {
        let node = S::from_f64_const(x);
        let weight = S::from_f64_const(w);
        let h = S::from_f64_const(0.5);
        rule.push((h * (S::one() - node), h * weight));
        rule.push((h * (S::one() + node), h * weight));
    }
    rule.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    Ok(rule)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn integrate(n: usize, f: impl Fn(f64) -> f64) -> f64 {
        gauss_unit::<f64>(n).unwrap().iter().map(|&(x, w)| w * f(x)).sum()
    }

    #[test]
    fn weights_sum_to_one() {
        for n in [2, 4, 6, 8, 10, 12] {
            let total: f64 = gauss_unit::<f64>(n).unwrap().iter().map(|&(_, w)| w).sum();
            assert!((total - 1.0).abs() < 1e-15, "n={n}");
        }
    }

    #[test]
    fn monomials_integrate_exactly_up_to_design_degree() {
        for n in [2usize, 4, 6, 8, 10, 12] {
            for k in 0..=(2 * n - 1) {
                let got = integrate(n, |x| x.powi(k as i32));
                let expect = 1.0 / (k as f64 + 1.0);
                assert!((got - expect).abs() < 1e-14, "n={n} k={k} got={got}");
            }
        }
    }

    #[test]
    fn rule_size_is_validated() {
        assert!(gauss_unit::<f64>(3).is_err());
        assert!(gauss_unit::<f64>(0).is_err());
    }

    #[test]
    fn smooth_nonpolynomial_integral_converges() {
        // An oscillatory integrand that the small rules cannot resolve:
        // errors shrink steeply with the rule size until round-off.
        let exact = (1.0 - (3.0 * std::f64::consts::PI).cos()) / (3.0 * std::f64::consts::PI);
        let f = |x: f64| (3.0 * std::f64::consts::PI * x).sin();
        let e6 = (integrate(6, f) - exact).abs();
        let e8 = (integrate(8, f) - exact).abs();
        let e10 = (integrate(10, f) - exact).abs();
        assert!(e8 < e6 / 100.0, "e6={e6:.3e} e8={e8:.3e}");
        assert!(e10 < 1e-9, "e10={e10:.3e}");
    }
}
