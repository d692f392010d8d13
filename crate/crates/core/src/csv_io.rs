//! CSV artifacts: walk-state snapshots, pair densities, phase sweeps and
//! position distributions.
//!
//! Reals are written with 17 significant digits (`{:.16e}`), which round-trips
//! every `f64` exactly. Separator is `,`, line ending LF.

use std::io::{self, Read, Write};

use num_complex::Complex64;

use crate::channel::SweepPoint;
use crate::error::{Error, Result};
use crate::spatial::PairDensity;
use crate::walk::{PositionDistribution, WalkState};

pub const STATE_HEADER: &str = "site,re_a0,im_a0,re_a1,im_a1";
pub const PAIR_META_HEADER: &str = "a,b,p_a,p_b,re_gamma,im_gamma";
pub const PAIR_ENTRY_HEADER: &str = "row,col,re,im";
pub const SWEEP_HEADER: &str = "phi,concurrence,negativity,trace_error";
pub const DISTRIBUTION_HEADER: &str = "step,site,probability";

/// 17 significant digits in scientific notation.
pub fn fmt_real(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_state<W: Write>(mut w: W, state: &WalkState) -> io::Result<()> {
    writeln!(w, "{STATE_HEADER}")?;
    for j in state.sites() {
        let [a0, a1] = state.amplitudes(j).expect("site in range");
        writeln!(w, "{j},{},{},{},{}", fmt_real(a0.re), fmt_real(a0.im), fmt_real(a1.re), fmt_real(a1.im))?;
    }
    Ok(())
}

fn parse_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

/// Reads a snapshot written by [`write_state`]. Sites must run contiguously from −L to L.
pub fn read_state<R: Read>(r: R) -> Result<WalkState> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(r);
    let headers = rdr.headers().map_err(parse_err)?.clone();
    if headers.iter().collect::<Vec<_>>().join(",") != STATE_HEADER {
        return Err(Error::Parse(format!("unexpected header {headers:?}")));
    }
    let mut sites = Vec::new();
    let mut first_site = None;
    for (k, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(parse_err)?;
        let site: i64 = rec[0].trim().parse().map_err(parse_err)?;
        let start = *first_site.get_or_insert(site);
        if site != start + k as i64 {
            return Err(Error::Parse(format!("site {site} out of sequence")));
        }
        let f = |i: usize| rec[i].trim().parse::<f64>().map_err(parse_err);
        sites.push([Complex64::new(f(1)?, f(2)?), Complex64::new(f(3)?, f(4)?)]);
    }
    let start = first_site.ok_or_else(|| Error::Parse("no sites".into()))?;
    let half_width = sites.len() / 2;
    if start != -(half_width as i64) || sites.len() % 2 == 0 {
        return Err(Error::Parse("sites must span -L..=L".into()));
    }
    WalkState::from_sites(half_width, &sites)
}

/// Metadata line then the 16 matrix entries. γ is written as NaN when undefined.
pub fn write_pair_density<W: Write>(mut w: W, rho: &PairDensity) -> io::Result<()> {
    let (a, b) = rho.sites();
    let gamma = rho.gamma().unwrap_or(Complex64::new(f64::NAN, f64::NAN));
    writeln!(w, "{PAIR_META_HEADER}")?;
    writeln!(
        w,
        "{a},{b},{},{},{},{}",
        fmt_real(rho.p_a()),
        fmt_real(rho.p_b()),
        fmt_real(gamma.re),
        fmt_real(gamma.im)
    )?;
    writeln!(w, "{PAIR_ENTRY_HEADER}")?;
    let m = rho.matrix();
    for i in 0..4 {
        for j in 0..4 {
            writeln!(w, "{i},{j},{},{}", fmt_real(m[(i, j)].re), fmt_real(m[(i, j)].im))?;
        }
    }
    Ok(())
}

pub fn write_sweep<W: Write>(mut w: W, curve: &[SweepPoint]) -> io::Result<()> {
    writeln!(w, "{SWEEP_HEADER}")?;
    for p in curve {
        writeln!(
            w,
            "{},{},{},{}",
            fmt_real(p.phi),
            fmt_real(p.concurrence),
            fmt_real(p.negativity),
            fmt_real(p.trace_error)
        )?;
    }
    Ok(())
}

/// Long format: one row per (step, site).
pub fn write_distributions<W: Write>(mut w: W, snapshots: &[(usize, PositionDistribution)]) -> io::Result<()> {
    writeln!(w, "{DISTRIBUTION_HEADER}")?;
    for (step, dist) in snapshots {
        for (j, p) in dist.iter() {
            writeln!(w, "{step},{j},{}", fmt_real(p))?;
        }
    }
    Ok(())
}
