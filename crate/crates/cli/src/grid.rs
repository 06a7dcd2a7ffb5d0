//! `--omega` specs: `start:stop:step`, a single value, or a comma list.

#[derive(Debug, Clone, PartialEq)]
pub enum OmegaSpec {
    Range { start: f64, stop: f64, step: f64 },
    List(Vec<f64>),
}

impl OmegaSpec {
    pub fn parse(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.contains(':') {
            let parts: Vec<&str> = s.split(':').collect();
            if parts.len() != 3 {
                return Err(format!("omega range '{s}' must be start:stop:step"));
            }
            let v: Vec<f64> = parts
                .iter()
                .map(|p| p.trim().parse::<f64>().map_err(|e| format!("bad number '{p}': {e}")))
                .collect::<Result<_, _>>()?;
            let (start, stop, step) = (v[0], v[1], v[2]);
            if !step.is_finite() || step <= 0.0 {
                return Err("omega step must be positive".into());
            }
            if start.is_nan() || stop.is_nan() || start >= stop {
                return Err("omega start must be below stop".into());
            }
            return Ok(OmegaSpec::Range { start, stop, step });
        }
        let list: Vec<f64> = s
            .split(',')
            .map(|p| p.trim().parse::<f64>().map_err(|e| format!("bad number '{p}': {e}")))
            .collect::<Result<_, _>>()?;
        if list.is_empty() {
            return Err("empty omega list".into());
        }
        Ok(OmegaSpec::List(list))
    }

    /// Step of a range spec.
    pub fn step(&self) -> Option<f64> {
        match self {
            OmegaSpec::Range { step, .. } => Some(*step),
            OmegaSpec::List(_) => None,
        }
    }

    /// Grid points in order; a range includes `stop` when it lands on the grid.
    pub fn points(&self) -> Vec<f64> {
        match self {
            OmegaSpec::List(v) => v.clone(),
            OmegaSpec::Range { start, stop, step } => {
                let count = ((stop - start) / step + 1e-9).floor() as usize;
                (0..=count).map(|i| start + i as f64 * step).collect()
            }
        }
    }
}

/// Moves points with `1 - delta < |w| <= 1` to `±(1 - delta)`. Returns how
/// many points moved.
pub fn clamp_to_cut(points: &mut [f64], delta: f64) -> usize {
    let edge = 1.0 - delta;
    let mut moved = 0;
    for w in points.iter_mut() {
        if w.abs() > edge && w.abs() <= 1.0 {
            *w = edge.copysign(*w);
            moved += 1;
        }
    }
    moved
}
