//! Cartesian sampling grids over (α, β, γ, q, n, z) with named presets.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AxisScale {
    Linear,
    Log,
}

/// One sampling axis, materialised as an explicit point list.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Axis {
    pub points: Vec<f64>,
}

impl Axis {
    pub fn list(points: Vec<f64>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::config("axis needs at least one point".to_string()));
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::config("axis points must be finite".to_string()));
        }
        Ok(Axis { points })
    }

    pub fn range(min: f64, max: f64, count: usize, scale: AxisScale) -> Result<Self> {
        if count < 1 {
            return Err(Error::config("axis count must be >= 1".to_string()));
        }
        if !(min.is_finite() && max.is_finite() && min <= max) {
            return Err(Error::config(format!(
                "axis range must satisfy min <= max, got [{min}, {max}]"
            )));
        }
        if scale == AxisScale::Log && min <= 0.0 {
            return Err(Error::config("log-scaled axis requires min > 0".to_string()));
        }
        let points = if count == 1 {
            vec![min]
        } else {
            match scale {
                AxisScale::Linear => (0..count)
                    .map(|i| min + (max - min) * i as f64 / (count - 1) as f64)
                    .collect(),
                AxisScale::Log => {
                    let (l, h) = (min.ln(), max.ln());
                    (0..count)
                        .map(|i| (l + (h - l) * i as f64 / (count - 1) as f64).exp())
                        .collect()
                }
            }
        };
        Ok(Axis { points })
    }
}

/// Full sampling specification for check and probe runs.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct GridSpec {
    pub preset: Option<String>,
    pub alpha: Axis,
    pub beta: Axis,
    pub gamma: Axis,
    pub q_set: Vec<f64>,
    pub n_set: Vec<u32>,
    /// Positive arguments for the one-sided inequalities.
    pub z_pos: Axis,
    /// Negative arguments for the real-line inequalities (guarded).
    pub z_neg: Vec<f64>,
    /// z grid for the tail-ratio monotonicity probes; capped so every tail
    /// stays inside the truncation budget for the smallest preset α.
    pub probe_z: Axis,
    /// β grid for the successor-ratio probe.
    pub probe_beta: Axis,
    /// Fixed z values for the successor-ratio probe. Positive only: the
    /// increase claim demonstrably fails for z < 0.
    pub probe_z_fixed: Vec<f64>,
}

fn neg_log_spaced(lo_mag: f64, hi_mag: f64, count: usize) -> Vec<f64> {
    let (l, h) = (lo_mag.ln(), hi_mag.ln());
    let mut v: Vec<f64> = (0..count)
        .map(|i| -(l + (h - l) * i as f64 / (count - 1) as f64).exp())
        .collect();
    v.sort_by(f64::total_cmp);
    v
}

impl GridSpec {
    /// Three points per continuous axis; a full sweep finishes in seconds.
    pub fn smoke() -> Self {
        GridSpec {
            preset: Some("smoke".to_string()),
            alpha: Axis::list(vec![0.5, 1.0, 2.0]).unwrap(),
            beta: Axis::list(vec![0.5, 1.5, 5.0]).unwrap(),
            gamma: Axis::list(vec![0.5, 1.0, 2.5]).unwrap(),
            q_set: vec![0.5, 1.0, 2.0],
            n_set: vec![0, 1, 2],
            z_pos: Axis::range(1e-4, 10.0, 3, AxisScale::Log).unwrap(),
            z_neg: vec![-2.0, -0.5],
            probe_z: Axis::range(1e-8, 5.0, 9, AxisScale::Log).unwrap(),
            probe_beta: Axis::range(0.4, 6.0, 8, AxisScale::Linear).unwrap(),
            probe_z_fixed: vec![0.1, 1.0],
        }
    }

    /// The fixed, citable verification surface.
    pub fn standard() -> Self {
        GridSpec {
            preset: Some("standard".to_string()),
            alpha: Axis::list(vec![0.25, 0.5, 1.0, 2.0, 3.0]).unwrap(),
            beta: Axis::list(vec![0.5, 1.0, 1.5, 2.5, 5.0]).unwrap(),
            gamma: Axis::list(vec![0.5, 1.0, 2.5]).unwrap(),
            q_set: vec![0.5, 1.0, 2.0],
            n_set: vec![0, 1, 2],
            z_pos: Axis::range(1e-6, 50.0, 25, AxisScale::Log).unwrap(),
            z_neg: neg_log_spaced(0.1, 5.0, 8),
            probe_z: Axis::range(1e-8, 5.0, 25, AxisScale::Log).unwrap(),
            probe_beta: Axis::range(0.3, 6.0, 20, AxisScale::Linear).unwrap(),
            probe_z_fixed: vec![0.1, 1.0, 5.0],
        }
    }

    /// Ten times the standard z density, denser α and β.
    pub fn deep() -> Self {
        GridSpec {
            preset: Some("deep".to_string()),
            alpha: Axis::range(0.25, 3.0, 15, AxisScale::Log).unwrap(),
            beta: Axis::range(0.3, 5.5, 15, AxisScale::Log).unwrap(),
            gamma: Axis::list(vec![0.25, 0.5, 1.0, 2.5, 4.0]).unwrap(),
            q_set: vec![0.25, 0.5, 0.75, 1.0, 2.0],
            n_set: vec![0, 1, 2],
            z_pos: Axis::range(1e-6, 50.0, 250, AxisScale::Log).unwrap(),
            z_neg: neg_log_spaced(0.1, 5.0, 24),
            probe_z: Axis::range(1e-8, 5.0, 80, AxisScale::Log).unwrap(),
            probe_beta: Axis::range(0.3, 6.0, 60, AxisScale::Linear).unwrap(),
            probe_z_fixed: vec![0.1, 1.0, 5.0],
        }
    }

    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "smoke" => Ok(Self::smoke()),
            "standard" => Ok(Self::standard()),
            "deep" => Ok(Self::deep()),
            other => Err(Error::config(format!(
                "unknown preset '{other}' (expected smoke, standard or deep)"
            ))),
        }
    }

    /// Apply `name=min:max:count[,log=true|false]` overrides, ';'-separated,
    /// to the continuous axes (alpha, beta, gamma, z).
    pub fn apply_overrides(&mut self, spec: &str) -> Result<()> {
        for part in spec.split(';').filter(|s| !s.trim().is_empty()) {
            let part = part.trim();
            let (name, rest) = part
                .split_once('=')
                .ok_or_else(|| Error::config(format!("bad axis spec '{part}' (expected name=min:max:count)")))?;
            let mut scale = AxisScale::Linear;
            let mut range = rest;
            if let Some((r, opt)) = rest.split_once(',') {
                range = r;
                let opt = opt.trim();
                match opt {
                    "log=true" => scale = AxisScale::Log,
                    "log=false" => scale = AxisScale::Linear,
                    other => {
                        return Err(Error::config(format!("bad axis option '{other}'")));
                    }
                }
            }
            let fields: Vec<&str> = range.split(':').collect();
            if fields.len() != 3 {
                return Err(Error::config(format!(
                    "bad axis range '{range}' (expected min:max:count)"
                )));
            }
            let parse = |s: &str| -> Result<f64> {
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::config(format!("bad number '{s}' in axis spec")))
            };
            let min = parse(fields[0])?;
            let max = parse(fields[1])?;
            let count = fields[2]
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::config(format!("bad count '{}' in axis spec", fields[2])))?;
            let axis = Axis::range(min, max, count, scale)?;
            match name.trim() {
                "alpha" => self.alpha = axis,
                "beta" => self.beta = axis,
                "gamma" => self.gamma = axis,
                "z" => self.z_pos = axis,
                other => {
                    return Err(Error::config(format!(
                        "unknown axis '{other}' (expected alpha, beta, gamma or z)"
                    )));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_and_lists() {
        let a = Axis::range(1.0, 100.0, 3, AxisScale::Log).unwrap();
        assert_eq!(a.points.len(), 3);
        assert!((a.points[1] - 10.0).abs() < 1e-12);
        let a = Axis::range(0.0, 1.0, 5, AxisScale::Linear).unwrap();
        assert_eq!(a.points[4], 1.0);
        assert!(Axis::range(0.0, 1.0, 5, AxisScale::Log).is_err());
        assert!(Axis::range(2.0, 1.0, 5, AxisScale::Linear).is_err());
        assert!(Axis::list(vec![]).is_err());
    }

    #[test]
    fn presets_exist() {
        for name in ["smoke", "standard", "deep"] {
            let g = GridSpec::by_name(name).unwrap();
            assert!(!g.alpha.points.is_empty());
            assert!(g.z_neg.iter().all(|z| *z < 0.0));
            assert!(g.z_neg.windows(2).all(|w| w[0] < w[1]));
        }
        assert!(GridSpec::by_name("huge").is_err());
        let std = GridSpec::standard();
        assert_eq!(std.alpha.points, vec![0.25, 0.5, 1.0, 2.0, 3.0]);
        assert_eq!(std.z_pos.points.len(), 25);
        assert_eq!(std.z_neg.len(), 8);
    }

    #[test]
    fn override_parsing() {
        let mut g = GridSpec::standard();
        g.apply_overrides("z=0:0.99:10,log=false;beta=0.5:4:5;gamma=0.1:1:4;alpha=0.3:3:4")
            .unwrap();
        assert_eq!(g.z_pos.points.len(), 10);
        assert_eq!(g.z_pos.points[0], 0.0);
        assert_eq!(g.beta.points.len(), 5);
        assert_eq!(g.alpha.points.len(), 4);
        assert!(g.apply_overrides("q=1:2:3").is_err());
        assert!(g.apply_overrides("z=1:2").is_err());
        assert!(g.apply_overrides("z=a:b:3").is_err());
    }
}
