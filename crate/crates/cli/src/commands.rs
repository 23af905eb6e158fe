use std::path::Path;

use serde_json::json;

use nanotube::bands::flux_period;
use nanotube::{
    band_gap, band_table, compare_spectra, diameter, dispersion, gap_vs_beta, is_metallic,
    BandParams, ChiralityVector, Error, KVector, LatticeSite, NodeClass, SpecialPoints,
    TubeSymmetry,
};

use crate::config::{Format, RunConfig};
use crate::error::CliError;
use crate::output::{emit_json, Cell, Table};

fn parse_triple(text: &str, what: &str) -> Result<[i64; 3], CliError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(CliError::Invalid(format!(
            "{what} must be three comma-separated integers, got '{text}'"
        )));
    }
    let mut out = [0i64; 3];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part
            .parse()
            .map_err(|_| CliError::Invalid(format!("{what}: '{part}' is not an integer")))?;
    }
    Ok(out)
}

fn parse_chirality(text: &str) -> Result<ChiralityVector, CliError> {
    let raw = parse_triple(text, "chirality")?;
    ChiralityVector::validate(raw).map_err(|e| match (&e, ChiralityVector::canonicalize(raw)) {
        (Error::OrderingViolation(_), Ok(canon)) => {
            let [c0, c1, c2] = canon.coords();
            CliError::Invalid(format!("{e}; the equivalent tube in the domain is --c {c0},{c1},{c2}"))
        }
        _ => CliError::from(e),
    })
}

/// Uniform hoppings, or the flux-threaded ones when `beta` is set.
fn band_params(cfg: &RunConfig, c: &ChiralityVector) -> Result<BandParams, CliError> {
    let a = cfg.scale();
    let p = match cfg.beta {
        Some(beta) => BandParams::magnetic(cfg.gamma, beta, c, a)?,
        None => BandParams::uniform(cfg.gamma, a)?,
    };
    Ok(p.with_epsilon(cfg.epsilon))
}

fn out_path(cfg: &RunConfig) -> Option<&Path> {
    cfg.out.as_deref()
}

pub fn classify(chirality: &str, cfg: &RunConfig) -> Result<(), CliError> {
    let c = parse_chirality(chirality)?;
    let sym = TubeSymmetry::new(c);
    let a = cfg.scale();
    let report = json!({
        "c": c.coords(),
        "class": c.class().as_str(),
        "n": sym.n,
        "c_prime": sym.c_prime.coords(),
        "R": sym.r,
        "b": sym.b.coords(),
        "q": sym.q,
        "q_prime": sym.q_prime,
        "omega": sym.omega.coords(),
        "delta": sym.delta(a),
        "diameter_angstrom": diameter(&c, a),
        "metallic": is_metallic(&c),
    });
    emit_json(&report, out_path(cfg))
}

pub fn bands(chirality: &str, cfg: &RunConfig) -> Result<(), CliError> {
    let c = parse_chirality(chirality)?;
    let sym = TubeSymmetry::new(c);
    let p = band_params(cfg, &c)?;
    let mut table = Table::new(&["m", "kappa", "E_minus", "E_plus"]);
    for m in 0..sym.n {
        let t = band_table(&sym, m, cfg.resolution, &p)?;
        for i in 0..t.len() {
            table.push(vec![
                Cell::Int(m),
                Cell::Num(t.kappa[i]),
                Cell::Num(t.e_minus[i]),
                Cell::Num(t.e_plus[i]),
            ]);
        }
    }
    table.emit(cfg.format.unwrap_or(Format::Csv), out_path(cfg))
}

pub fn gap(chirality: &str, cfg: &RunConfig) -> Result<(), CliError> {
    let c = parse_chirality(chirality)?;
    let sym = TubeSymmetry::new(c);
    let p = band_params(cfg, &c)?;
    let g = band_gap(&sym, &p, cfg.resolution)?;
    let report = json!({
        "c": c.coords(),
        "gap": g.gap,
        "argmin_m": g.argmin_m,
        "argmin_kappa": g.argmin_kappa,
        "argmin_k": g.argmin_k.0,
        "metallic_by_theorem": g.metallic_by_theorem,
        "beta": cfg.beta.unwrap_or(0.0),
    });
    emit_json(&report, out_path(cfg))
}

pub fn magsweep(
    chirality: &str,
    cfg: &RunConfig,
    periods: u32,
    samples: usize,
) -> Result<(), CliError> {
    if samples < 2 {
        return Err(CliError::Invalid(format!("samples must be at least 2, got {samples}")));
    }
    if periods == 0 {
        return Err(CliError::Invalid("periods must be at least 1".into()));
    }
    let c = parse_chirality(chirality)?;
    let sym = TubeSymmetry::new(c);
    let a = cfg.scale();
    let step = flux_period(&c, a) / (samples - 1) as f64;
    let start = cfg.beta.unwrap_or(0.0);
    let count = (samples - 1) * periods as usize + 1;
    let betas: Vec<f64> = (0..count).map(|i| start + step * i as f64).collect();
    let sweep = gap_vs_beta(&sym, cfg.gamma, a, &betas, cfg.resolution)?;
    let mut table = Table::new(&["beta", "gap"]);
    for (beta, gap) in sweep {
        table.push(vec![Cell::Num(beta), Cell::Num(gap)]);
    }
    table.emit(cfg.format.unwrap_or(Format::Csv), out_path(cfg))
}

pub fn graphene_path(path: &str, cfg: &RunConfig, samples: usize) -> Result<(), CliError> {
    if samples < 2 {
        return Err(CliError::Invalid(format!("samples must be at least 2, got {samples}")));
    }
    let a = cfg.scale();
    let points = SpecialPoints::new(a);
    let vertices: Vec<KVector> = path
        .split(',')
        .map(|label| {
            points.by_label(label.trim()).ok_or_else(|| {
                CliError::Invalid(format!("unknown path label '{label}' (expected G, K or M)"))
            })
        })
        .collect::<Result<_, _>>()?;
    if vertices.len() < 2 {
        return Err(CliError::Invalid("path needs at least two labels".into()));
    }
    let p = BandParams::uniform(cfg.gamma, a)?.with_epsilon(cfg.epsilon);

    let legs: Vec<(KVector, KVector, f64)> = vertices
        .windows(2)
        .map(|w| (w[0], w[1], (w[1] - w[0]).norm()))
        .filter(|leg| leg.2 > 0.0)
        .collect();
    let total: f64 = legs.iter().map(|leg| leg.2).sum();

    let mut table = Table::new(&["arclength", "k0", "k1", "k2", "E_minus", "E_plus"]);
    let mut push = |s: f64, k: KVector| {
        let (lo, hi) = dispersion(&k, &p);
        table.push(vec![
            Cell::Num(s),
            Cell::Num(k.0[0]),
            Cell::Num(k.0[1]),
            Cell::Num(k.0[2]),
            Cell::Num(lo),
            Cell::Num(hi),
        ]);
    };
    let mut offset = 0.0;
    for &(from, to, len) in &legs {
        let steps = (((samples - 1) as f64 * len / total).round() as usize).max(1);
        for i in 0..steps {
            let t = i as f64 / steps as f64;
            push(offset + t * len, from + t * (to - from));
        }
        offset += len;
    }
    if let Some(&(_, last, _)) = legs.last() {
        push(offset, last);
    }
    table.emit(cfg.format.unwrap_or(Format::Csv), out_path(cfg))
}

pub fn verify(chirality: &str, cfg: &RunConfig, periods: i64) -> Result<(), CliError> {
    if periods < 1 {
        return Err(CliError::Invalid(format!("periods must be at least 1, got {periods}")));
    }
    let c = parse_chirality(chirality)?;
    let sym = TubeSymmetry::new(c);
    let p = band_params(cfg, &c)?;
    let tol = cfg.tolerance * cfg.gamma;
    let report = compare_spectra(&sym, periods, &p, tol)?;
    let value = json!({
        "c": c.coords(),
        "periods": report.periods,
        "dimension": report.dimension,
        "max_deviation": report.max_deviation,
        "tolerance": report.tolerance,
        "pass": report.pass,
        "beta": cfg.beta.unwrap_or(0.0),
        "finite": report.finite,
        "analytic": report.analytic,
    });
    emit_json(&value, out_path(cfg))?;
    if report.pass {
        Ok(())
    } else {
        Err(CliError::Verification(format!(
            "max deviation {:e} exceeds tolerance {:e}",
            report.max_deviation, report.tolerance
        )))
    }
}

pub fn neighbors(site: &str, chirality: Option<&str>, cfg: &RunConfig) -> Result<(), CliError> {
    let v = LatticeSite::try_from(parse_triple(site, "site")?)?;
    let report = match chirality {
        None => json!({
            "v": v.coords(),
            "nu": v.nu(),
            "nearest": v.nearest_neighbors().map(|u| u.coords()),
            "next_nearest": v.next_nearest_neighbors().map(|u| u.coords()),
        }),
        Some(text) => {
            let c = parse_chirality(text)?;
            let class = NodeClass::new(v, c);
            json!({
                "v": v.coords(),
                "c": c.coords(),
                "nu": v.nu(),
                "class": class.rep.coords(),
                "nearest": class.neighbors().map(|u| u.rep.coords()),
                "next_nearest": class.next_nearest().map(|u| u.rep.coords()),
            })
        }
    };
    emit_json(&report, out_path(cfg))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triple_parsing() {
        assert_eq!(parse_triple("4,-2,-2", "c").unwrap(), [4, -2, -2]);
        assert_eq!(parse_triple(" 5, 0 ,-5", "c").unwrap(), [5, 0, -5]);
        assert!(parse_triple("4,-2", "c").is_err());
        assert!(parse_triple("4,x,-2", "c").is_err());
    }

    #[test]
    fn chirality_hint() {
        let err = parse_chirality("1,1,-2").unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("--c 2,-1,-1"), "{err}");
        assert_eq!(parse_chirality("1,1,1").unwrap_err().exit_code(), 2);
    }
}
