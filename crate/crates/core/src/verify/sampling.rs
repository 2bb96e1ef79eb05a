use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Log-spaced magnitudes in `[x_min, x_max]`, mirrored in sign.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Sampling {
    pub x_min: f64,
    pub x_max: f64,
    /// Points per sign.
    pub per_side: usize,
    /// Jitters each magnitude within its log cell when set.
    pub seed: Option<u64>,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling {
            x_min: 1e-3,
            x_max: 6.0,
            per_side: 20,
            seed: None,
        }
    }
}

impl Sampling {
    pub fn with_per_side(self, per_side: usize) -> Self {
        Sampling { per_side, ..self }
    }

    /// Positive magnitudes, ascending.
    pub fn magnitudes(&self) -> Vec<f64> {
        let n = self.per_side.max(1);
        let (l0, l1) = (self.x_min.ln(), self.x_max.ln());
        let step = if n > 1 {
            (l1 - l0) / (n - 1) as f64
        } else {
            0.0
        };
        let mut rng = self.seed.map(ChaCha8Rng::seed_from_u64);
        (0..n)
            .map(|i| {
                let mut l = l0 + step * i as f64;
                if let Some(r) = rng.as_mut() {
                    l += step * r.gen_range(-0.5..0.5);
                }
                l.clamp(l0, l1).exp()
            })
            .collect()
    }

    /// Negative mirror images followed by the magnitudes.
    pub fn points(&self) -> Vec<f64> {
        let m = self.magnitudes();
        m.iter()
            .rev()
            .map(|x| -x)
            .chain(m.iter().copied())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_and_symmetry() {
        let s = Sampling::default();
        let p = s.points();
        assert_eq!(p.len(), 40);
        assert!((p[20] - 1e-3).abs() < 1e-18 && (p[39] - 6.0).abs() < 1e-12);
        for i in 0..20 {
            assert_eq!(p[i], -p[39 - i]);
        }
    }

    #[test]
    fn seeded_jitter_is_reproducible() {
        let s = Sampling {
            seed: Some(7),
            ..Sampling::default()
        };
        assert_eq!(s.points(), s.points());
        assert_ne!(s.points(), Sampling::default().points());
        assert!(s.magnitudes().iter().all(|&x| (1e-3..=6.0).contains(&x)));
    }
}
