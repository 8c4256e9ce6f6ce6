//! Datasets behind the survey figures.
//!
//! Each figure id yields (x, y, series) triples plus metadata echoing every
//! parameter, including the documented defaults for values the captions
//! leave open (scattering sweeps use E = 2m; profile figures use d = 3 with
//! all-even parities). Oscillator spectra sweep both uniform parity signs at
//! fixed ℓ_j = 1; those sweeps are formula-level in the sense of
//! [`crate::oscillator`].

use crate::config::{AngularState, DunklConfig, Parity};
use crate::coulomb::{self, CoulombSpec};
use crate::error::{Error, Result};
use crate::oscillator::{self, Branch, OscillatorSpec};
use crate::scattering;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Identifier of one survey figure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FigureId {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
}

impl FigureId {
    pub const ALL: [FigureId; 8] = [
        FigureId::F1,
        FigureId::F2,
        FigureId::F3,
        FigureId::F4,
        FigureId::F5,
        FigureId::F6,
        FigureId::F7,
        FigureId::F8,
    ];
}

impl std::str::FromStr for FigureId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "F1" => Ok(FigureId::F1),
            "F2" => Ok(FigureId::F2),
            "F3" => Ok(FigureId::F3),
            "F4" => Ok(FigureId::F4),
            "F5" => Ok(FigureId::F5),
            "F6" => Ok(FigureId::F6),
            "F7" => Ok(FigureId::F7),
            "F8" => Ok(FigureId::F8),
            other => Err(Error::UnknownFigure(other.to_string())),
        }
    }
}

impl std::fmt::Display for FigureId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DataPoint {
    pub x: f64,
    pub y: f64,
    pub series: String,
}

#[derive(Debug, Clone)]
pub struct Dataset {
    pub figure: FigureId,
    pub x_label: &'static str,
    pub y_label: &'static str,
    pub points: Vec<DataPoint>,
    pub metadata: Vec<(String, String)>,
}

impl Dataset {
    /// The y-values of one series in x-order.
    pub fn series(&self, label: &str) -> Vec<(f64, f64)> {
        self.points
            .iter()
            .filter(|p| p.series == label)
            .map(|p| (p.x, p.y))
            .collect()
    }

    pub fn series_labels(&self) -> Vec<String> {
        let mut labels = Vec::new();
        for p in &self.points {
            if !labels.contains(&p.series) {
                labels.push(p.series.clone());
            }
        }
        labels
    }
}

pub fn figure_data(id: FigureId) -> Result<Dataset> {
    match id {
        FigureId::F1 => oscillator_spectra(id, 0.4),
        FigureId::F2 => oscillator_spectra(id, -0.4),
        FigureId::F3 => oscillator_profiles(id),
        FigureId::F4 => coulomb_vs_n(id),
        FigureId::F5 => coulomb_vs_coupling(id),
        FigureId::F6 => coulomb_vs_dimension(id),
        FigureId::F7 => pair_probability_sweep(id, 3),
        FigureId::F8 => pair_probability_sweep(id, 4),
    }
}

fn base_metadata(id: FigureId) -> Vec<(String, String)> {
    vec![
        ("figure".into(), id.to_string()),
        ("units".into(), "natural units (hbar=c=1), e^2=1/137".into()),
        ("m".into(), "1".into()),
    ]
}

/// F1/F2: oscillator spectrum vs n for d = 3..6 and both uniform parities,
/// ℓ_j = 1, m = ω = 1.
fn oscillator_spectra(id: FigureId, mu: f64) -> Result<Dataset> {
    let mut points = Vec::new();
    for d in 3..=6usize {
        for parity in [Parity::Plus, Parity::Minus] {
            let config = DunklConfig::uniform(d, mu, parity)?;
            let ang = AngularState::uniform(d, 2);
            let spec = OscillatorSpec::new(config, ang, 1.0, 1.0)?;
            let series = format!("d={d} s={parity}1");
            for n in 0..=10u32 {
                points.push(DataPoint {
                    x: n as f64,
                    y: oscillator::energy(&spec, n, Branch::Positive)?,
                    series: series.clone(),
                });
            }
        }
    }
    let mut metadata = base_metadata(id);
    metadata.push(("omega".into(), "1".into()));
    metadata.push(("mu_i".into(), format!("{mu}")));
    metadata.push(("ell_i".into(), "1 (every axis)".into()));
    metadata.push((
        "parity_sweep".into(),
        "uniform s=±1, formula-level at fixed ell".into(),
    ));
    Ok(Dataset {
        figure: id,
        x_label: "n",
        y_label: "E",
        points,
        metadata,
    })
}

/// F3: |R(ρ)|² with C = 1 for n = 2..5 at μ = ±0.4
/// (d = 3, ℓ = (1,1), s = +1). The C = 1 convention is what makes the
/// peak heights fall with n.
fn oscillator_profiles(id: FigureId) -> Result<Dataset> {
    let tasks: Vec<(f64, u32)> = [0.4, -0.4]
        .into_iter()
        .flat_map(|mu| (2..=5u32).map(move |n| (mu, n)))
        .collect();
    let chunks: Result<Vec<Vec<DataPoint>>> = tasks
        .par_iter()
        .map(|&(mu, n)| {
            let config = DunklConfig::uniform(3, mu, Parity::Plus)?;
            let ang = AngularState::uniform(3, 2);
            let spec = OscillatorSpec::new(config, ang, 1.0, 1.0)?;
            let series = format!("mu={mu} n={n}");
            oscillator::default_grid(&spec, n)
                .into_iter()
                .map(|rho| {
                    let v = oscillator::radial_wavefunction(&spec, n, rho)?;
                    Ok(DataPoint {
                        x: rho,
                        y: v * v,
                        series: series.clone(),
                    })
                })
                .collect()
        })
        .collect();
    let mut metadata = base_metadata(id);
    metadata.push(("omega".into(), "1".into()));
    metadata.push(("d".into(), "3 (caption leaves it open)".into()));
    metadata.push(("ell".into(), "(1,1)".into()));
    metadata.push(("s".into(), "+1 on every axis".into()));
    metadata.push(("normalization".into(), "C = 1".into()));
    Ok(Dataset {
        figure: id,
        x_label: "rho",
        y_label: "|R|^2",
        points: chunks?.into_iter().flatten().collect(),
        metadata,
    })
}

fn coulomb_spec(d: usize, mu: f64, ze2: f64) -> Result<CoulombSpec> {
    let config = DunklConfig::uniform(d, mu, Parity::Plus)?;
    let ang = AngularState::uniform(d, 2);
    CoulombSpec::new(config, ang, 1.0, ze2)
}

/// F4: Coulomb levels vs n for d = 3..6 and μ = ±0.4, ℓ_j = 1, Ze² = 1.
fn coulomb_vs_n(id: FigureId) -> Result<Dataset> {
    let mut points = Vec::new();
    for mu in [0.4, -0.4] {
        for d in 3..=6usize {
            let spec = coulomb_spec(d, mu, 1.0)?;
            let series = format!("d={d} mu={mu}");
            for n in 0..=10u32 {
                points.push(DataPoint {
                    x: n as f64,
                    y: coulomb::energy_ascending(&spec, n)?,
                    series: series.clone(),
                });
            }
        }
    }
    let mut metadata = base_metadata(id);
    metadata.push(("Ze2".into(), "1".into()));
    metadata.push(("ell_i".into(), "1 (every axis)".into()));
    metadata.push(("branch".into(), "ascending (oracle-matching)".into()));
    Ok(Dataset {
        figure: id,
        x_label: "n",
        y_label: "E/m",
        points,
        metadata,
    })
}

/// F5: Coulomb levels vs Ze² up to the critical coupling, n-curves for
/// d ∈ {3,4}, μ = ±0.4, ℓ_j = 1.
fn coulomb_vs_coupling(id: FigureId) -> Result<Dataset> {
    let mut points = Vec::new();
    let steps = 60;
    for mu in [0.4, -0.4] {
        for d in [3usize, 4] {
            let probe = coulomb_spec(d, mu, 0.0)?;
            let ze2_max = coulomb::constraint_radicand(&probe).sqrt();
            for n in 0..=3u32 {
                let series = format!("d={d} mu={mu} n={n}");
                for k in 0..=steps {
                    let ze2 = ze2_max * (0.1 + 0.9 * k as f64 / steps as f64);
                    let spec = coulomb_spec(d, mu, ze2)?;
                    points.push(DataPoint {
                        x: ze2,
                        y: coulomb::energy_ascending(&spec, n)?,
                        series: series.clone(),
                    });
                }
            }
        }
    }
    let mut metadata = base_metadata(id);
    metadata.push(("ell_i".into(), "1 (every axis)".into()));
    metadata.push(("sweep".into(), "Ze² from 0.1×critical to the critical coupling".into()));
    Ok(Dataset {
        figure: id,
        x_label: "Ze2",
        y_label: "E/m",
        points,
        metadata,
    })
}

/// F6: Coulomb levels vs dimension for n = 0..3, μ = ±0.4, ℓ_j = 1, Ze² = 1.
fn coulomb_vs_dimension(id: FigureId) -> Result<Dataset> {
    let mut points = Vec::new();
    for mu in [0.4, -0.4] {
        for n in 0..=3u32 {
            let series = format!("n={n} mu={mu}");
            for d in 3..=8usize {
                let spec = coulomb_spec(d, mu, 1.0)?;
                points.push(DataPoint {
                    x: d as f64,
                    y: coulomb::energy_ascending(&spec, n)?,
                    series: series.clone(),
                });
            }
        }
    }
    let mut metadata = base_metadata(id);
    metadata.push(("Ze2".into(), "1".into()));
    metadata.push(("ell_i".into(), "1 (every axis)".into()));
    Ok(Dataset {
        figure: id,
        x_label: "d",
        y_label: "E/m",
        points,
        metadata,
    })
}

/// F7/F8: pair-creation probability vs Ze² for μ ∈ {0, ±0.4} at ℓ_j = 1 in
/// d = 3 or 4. Each series starts at its own creation threshold; E = 2m.
fn pair_probability_sweep(id: FigureId, d: usize) -> Result<Dataset> {
    let energy = 2.0;
    let ze2_hi = 14.0;
    let steps = 80;
    let mut points = Vec::new();
    for mu in [0.0, 0.4, -0.4] {
        let config = DunklConfig::uniform(d, mu, Parity::Plus)?;
        let ang = AngularState::uniform(d, 2);
        // a relative nudge keeps the first point on the real side of the
        // β̃ square root
        let threshold = (-scattering::creation_radicand(&config, &ang, 0.0)).sqrt()
            * (1.0 + 1e-9);
        let series = format!("mu={mu}");
        for k in 0..=steps {
            let ze2 = threshold + (ze2_hi - threshold) * k as f64 / steps as f64;
            let input = scattering::ScatterInput::new(
                config.clone(),
                ang.clone(),
                1.0,
                ze2,
                energy,
            )?;
            points.push(DataPoint {
                x: ze2,
                y: scattering::pair_probability(&input)?,
                series: series.clone(),
            });
        }
    }
    let mut metadata = base_metadata(id);
    metadata.push(("d".into(), format!("{d}")));
    metadata.push(("ell_i".into(), "1 (every axis)".into()));
    metadata.push(("E".into(), "2m (captions leave it open)".into()));
    metadata.push((
        "sweep".into(),
        "Ze² from each series' creation threshold".into(),
    ));
    Ok(Dataset {
        figure: id,
        x_label: "Ze2",
        y_label: "P",
        points,
        metadata,
    })
}
