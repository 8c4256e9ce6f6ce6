//! Flag parsing shared by the physics subcommands: comma lists with a
//! scalar broadcast shorthand, '+'/'-' parity tokens, inclusive index
//! ranges "a..b" and sweeps "start..stop:steps".

use clap::Args;
use dkg::config::Parity;
use dkg::{AngularState, DunklConfig, Error};
use serde::{Deserialize, Serialize};

#[derive(Args, Serialize, Deserialize, Clone)]
pub struct PhysicsArgs {
    /// dimension d >= 2
    #[arg(long)]
    pub d: usize,

    /// comma list of d Dunkl parameters, or one value broadcast to all axes
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub mu: String,

    /// comma list of d parities '+'/'-', or one token broadcast
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    pub s: String,

    /// comma list of d-1 angular numbers (integers or half-integers), or
    /// one value broadcast
    #[arg(long, default_value = "0")]
    pub l: String,
}

impl PhysicsArgs {
    pub fn build(&self) -> Result<(DunklConfig, AngularState), Error> {
        let mu = broadcast_floats(&self.mu, self.d, "--mu")?;
        let s = parse_parities(&self.s, self.d)?;
        let config = DunklConfig::new(self.d, mu, s)?;
        let ell = broadcast_floats(&self.l, self.d.saturating_sub(1), "--l")?;
        let ang = AngularState::from_ell(&ell)?;
        Ok((config, ang))
    }

    pub fn echo(&self) -> Vec<(String, String)> {
        vec![
            ("d".into(), self.d.to_string()),
            ("mu".into(), self.mu.clone()),
            ("s".into(), self.s.clone()),
            ("l".into(), self.l.clone()),
        ]
    }
}

fn broadcast_floats(text: &str, count: usize, flag: &str) -> Result<Vec<f64>, Error> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let mut values = Vec::with_capacity(parts.len());
    for part in &parts {
        values.push(part.parse::<f64>().map_err(|_| {
            Error::InvalidParameter(format!("{flag}: cannot parse '{part}' as a number"))
        })?);
    }
    if values.len() == 1 && count > 1 {
        return Ok(vec![values[0]; count]);
    }
    if values.len() != count {
        return Err(Error::InvalidParameter(format!(
            "{flag}: expected {count} comma-separated values (or one to broadcast), got {}",
            values.len()
        )));
    }
    Ok(values)
}

fn parse_parities(text: &str, count: usize) -> Result<Vec<Parity>, Error> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let mut values = Vec::with_capacity(parts.len());
    for part in &parts {
        values.push(match *part {
            "+" | "+1" => Parity::Plus,
            "-" | "-1" => Parity::Minus,
            other => {
                return Err(Error::InvalidParameter(format!(
                    "--s: expected '+' or '-', got '{other}'"
                )))
            }
        });
    }
    if values.len() == 1 && count > 1 {
        return Ok(vec![values[0]; count]);
    }
    if values.len() != count {
        return Err(Error::InvalidParameter(format!(
            "--s: expected {count} parity tokens (or one to broadcast), got {}",
            values.len()
        )));
    }
    Ok(values)
}

/// "a..b" (inclusive) or a single index.
pub fn parse_index_range(text: &str) -> Result<Vec<u32>, Error> {
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: u32 = lo.trim().parse().map_err(|_| bad_range(text))?;
        let hi: u32 = hi.trim().parse().map_err(|_| bad_range(text))?;
        if hi < lo {
            return Err(bad_range(text));
        }
        Ok((lo..=hi).collect())
    } else {
        let single: u32 = text.trim().parse().map_err(|_| bad_range(text))?;
        Ok(vec![single])
    }
}

fn bad_range(text: &str) -> Error {
    Error::InvalidParameter(format!(
        "cannot parse '{text}' as an index range \"a..b\" or single index"
    ))
}

/// "start..stop:steps" — steps+1 evenly spaced points, endpoints included.
pub fn parse_sweep(text: &str) -> Result<Vec<f64>, Error> {
    let bad = || {
        Error::InvalidParameter(format!(
            "cannot parse '{text}' as a sweep \"start..stop:steps\""
        ))
    };
    let (range, steps) = text.split_once(':').ok_or_else(bad)?;
    let (start, stop) = range.split_once("..").ok_or_else(bad)?;
    let start: f64 = start.trim().parse().map_err(|_| bad())?;
    let stop: f64 = stop.trim().parse().map_err(|_| bad())?;
    let steps: usize = steps.trim().parse().map_err(|_| bad())?;
    if steps == 0 || !(stop > start) {
        return Err(bad());
    }
    Ok((0..=steps)
        .map(|i| start + (stop - start) * i as f64 / steps as f64)
        .collect())
}
