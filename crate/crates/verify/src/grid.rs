//! Parameter sweeps.

use serde::{Deserialize, Serialize};

use crate::error::{Result, VerifyError};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    #[default]
    Linear,
    Geometric,
}

/// One swept parameter: either explicit values or `count` samples of `[min, max]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Axis {
    Values { values: Vec<f64> },
    Range {
        min: f64,
        max: f64,
        #[serde(default = "one")]
        count: usize,
        #[serde(default)]
        spacing: Spacing,
    },
}

fn one() -> usize {
    1
}

impl Axis {
    pub fn values(v: &[f64]) -> Self {
        Axis::Values { values: v.to_vec() }
    }

    pub fn range(min: f64, max: f64, count: usize, spacing: Spacing) -> Self {
        Axis::Range { min, max, count, spacing }
    }

    pub fn validate(&self, name: &str) -> Result<()> {
        match self {
            Axis::Values { values } => {
                if values.is_empty() {
                    return Err(VerifyError::config(format!("axis {name}: empty value list")));
                }
                if values.iter().any(|v| !v.is_finite()) {
                    return Err(VerifyError::config(format!("axis {name}: non-finite value")));
                }
            }
            Axis::Range { min, max, count, spacing } => {
                if *count == 0 {
                    return Err(VerifyError::config(format!("axis {name}: count must be at least 1")));
                }
                if !(min.is_finite() && max.is_finite()) || min > max {
                    return Err(VerifyError::config(format!("axis {name}: need finite min <= max")));
                }
                if *spacing == Spacing::Geometric && !(*min > 0.0) {
                    return Err(VerifyError::config(format!("axis {name}: geometric spacing needs min > 0")));
                }
            }
        }
        Ok(())
    }

    pub fn samples(&self) -> Vec<f64> {
        match self {
            Axis::Values { values } => values.clone(),
            Axis::Range { min, max, count, spacing } => {
                if *count == 1 {
                    return vec![*min];
                }
                let last = (*count - 1) as f64;
                (0..*count)
                    .map(|j| {
                        let f = j as f64 / last;
                        if j + 1 == *count {
                            *max
                        } else {
                            match spacing {
                                Spacing::Linear => min + (max - min) * f,
                                Spacing::Geometric => min * (max / min).powf(f),
                            }
                        }
                    })
                    .collect()
            }
        }
    }

    /// Parses `a,b,c` or `min:max:count[:linear|geometric]`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || VerifyError::config(format!("cannot parse axis `{text}`"));
        let num = |s: &str| s.trim().parse::<f64>().map_err(|_| bad());
        let axis = if text.contains(':') {
            let parts: Vec<&str> = text.split(':').collect();
            if !(3..=4).contains(&parts.len()) {
                return Err(bad());
            }
            let count = parts[2].trim().parse::<usize>().map_err(|_| bad())?;
            let spacing = match parts.get(3).map(|s| s.trim()) {
                None | Some("linear") => Spacing::Linear,
                Some("geometric") => Spacing::Geometric,
                Some(_) => return Err(bad()),
            };
            Axis::range(num(parts[0])?, num(parts[1])?, count, spacing)
        } else {
            Axis::Values { values: text.split(',').map(num).collect::<Result<_>>()? }
        };
        Ok(axis)
    }
}

/// Named axes; the grid is their Cartesian product.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub axes: Vec<(String, Axis)>,
}

/// One grid point as `(axis, value)` pairs in axis order.
#[derive(Debug, Clone, PartialEq)]
pub struct Point(pub Vec<(String, f64)>);

impl Point {
    pub fn get(&self, name: &str) -> Option<f64> {
        self.0.iter().find(|(k, _)| k == name).map(|(_, v)| *v)
    }
}

impl GridSpec {
    pub fn with(mut self, name: &str, axis: Axis) -> Self {
        self.set(name, axis);
        self
    }

    /// Inserts or replaces an axis, keeping first-insertion order.
    pub fn set(&mut self, name: &str, axis: Axis) {
        match self.axes.iter_mut().find(|(k, _)| k == name) {
            Some(slot) => slot.1 = axis,
            None => self.axes.push((name.to_string(), axis)),
        }
    }

    pub fn validate(&self, allowed: &[&str]) -> Result<()> {
        if self.axes.is_empty() {
            return Err(VerifyError::config("grid has no axes"));
        }
        for (name, axis) in &self.axes {
            if !allowed.contains(&name.as_str()) {
                return Err(VerifyError::config(format!("axis `{name}` not accepted; expected one of {}", allowed.join(", "))));
            }
            axis.validate(name)?;
        }
        Ok(())
    }

    /// Grid points in row-major order: the last axis varies fastest.
    pub fn points(&self) -> Vec<Point> {
        let mut out = vec![Point(Vec::new())];
        for (name, axis) in &self.axes {
            let samples = axis.samples();
            let mut next = Vec::with_capacity(out.len() * samples.len());
            for p in &out {
                for &v in &samples {
                    let mut q = p.clone();
                    q.0.push((name.clone(), v));
                    next.push(q);
                }
            }
            out = next;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_endpoints_are_exact() {
        let a = Axis::range(50.0, 800.0, 5, Spacing::Geometric).samples();
        assert_eq!(a, vec![50.0, 100.0, 200.0, 400.0, 800.0]);
    }

    #[test]
    fn parse_forms() {
        assert_eq!(Axis::parse("2,3,4").unwrap(), Axis::values(&[2.0, 3.0, 4.0]));
        assert_eq!(Axis::parse("1:2:3").unwrap(), Axis::range(1.0, 2.0, 3, Spacing::Linear));
        assert!(Axis::parse("1:2").is_err());
        assert!(Axis::parse("x").is_err());
    }

    #[test]
    fn product_order() {
        let g = GridSpec::default().with("a", Axis::values(&[1.0, 2.0])).with("b", Axis::values(&[3.0, 4.0]));
        let p: Vec<Vec<f64>> = g.points().iter().map(|p| p.0.iter().map(|x| x.1).collect()).collect();
        assert_eq!(p, vec![vec![1.0, 3.0], vec![1.0, 4.0], vec![2.0, 3.0], vec![2.0, 4.0]]);
    }

    #[test]
    fn validation() {
        let g = GridSpec::default().with("t", Axis::range(2.0, 1.0, 3, Spacing::Linear));
        assert!(g.validate(&["t"]).is_err());
        let g = GridSpec::default().with("q", Axis::values(&[1.0]));
        assert!(g.validate(&["t"]).is_err());
        assert!(GridSpec::default().validate(&["t"]).is_err());
        let g = GridSpec::default().with("t", Axis::range(0.0, 1.0, 3, Spacing::Geometric));
        assert!(g.validate(&["t"]).is_err());
    }
}
