//! 7-point Gauss / 15-point Kronrod pair.

/// Kronrod abscissae on [-1, 1], descending; odd indices are the Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

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

/// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

pub(crate) const NODES: usize = 15;

#[derive(Debug, Clone, Copy)]
pub(crate) struct PanelRule {
    pub kronrod: f64,
    pub gauss: f64,
    /// Kronrod estimate of the integral of `|f|`.
    pub abs: f64,
}

impl PanelRule {
    pub fn error(&self) -> f64 {
        (self.kronrod - self.gauss).abs()
    }
}

/// Both rules on `[a, b]` from one set of 15 evaluations.
pub(crate) fn gk15<F, E>(f: &F, a: f64, b: f64) -> Result<PanelRule, E>
where
    F: Fn(f64) -> Result<f64, E>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center)?;
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    let mut abs = WGK[7] * fc.abs();
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx)?;
        let f2 = f(center + dx)?;
        kronrod += WGK[j] * (f1 + f2);
        abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    Ok(PanelRule {
        kronrod: kronrod * half,
        gauss: gauss * half,
        abs: abs * half.abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ok(v: f64) -> Result<f64, ()> {
        Ok(v)
    }

    #[test]
    fn weights_sum_to_two() {
        let k: f64 = WGK[7] + 2.0 * WGK[..7].iter().sum::<f64>();
        let g: f64 = WG[3] + 2.0 * WG[..3].iter().sum::<f64>();
        assert!((k - 2.0).abs() < 1e-15);
        assert!((g - 2.0).abs() < 1e-15);
    }

    #[test]
    fn exact_on_polynomials() {
        // Gauss-7 integrates degree 13 exactly, Kronrod-15 degree 22.
        let r = gk15(&|x: f64| ok(x.powi(13) + x.powi(12)), 0.0, 1.0).unwrap();
        assert!((r.gauss - (1.0 / 14.0 + 1.0 / 13.0)).abs() < 1e-15);
        let r = gk15(&|x: f64| ok(x.powi(22)), -1.0, 1.0).unwrap();
        assert!((r.kronrod - 2.0 / 23.0).abs() < 1e-15);
    }
}
