use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use burge_core::fermionic::evaluate;
use burge_core::qcombinat::{b_kernel, d_poly, g_poly, qbinomial};
use burge_core::{BoundMode, CoprimePair, Family, FermionicSpec, FermionicValue, RationalParam};

use crate::{EvalArgs, Object, EXIT_USAGE};

pub fn run(args: &EvalArgs) -> u8 {
    match render(args) {
        Ok(line) => {
            println!("{line}");
            0
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn int(s: &str) -> Result<i64> {
    s.parse().with_context(|| format!("expected an integer, got {s:?}"))
}

fn rational(s: &str) -> Result<RationalParam> {
    Ok(RationalParam::from_str(s)?)
}

fn expect<'a>(params: &'a [String], names: &[&str]) -> Result<&'a [String]> {
    if params.len() != names.len() {
        bail!(
            "expected {} parameters ({}), got {}",
            names.len(),
            names.join(" "),
            params.len()
        );
    }
    Ok(params)
}

fn family(name: &str) -> Result<Family> {
    match name {
        "F" => Ok(Family::F),
        "f" => Ok(Family::LittleF),
        "H" => Ok(Family::H),
        "I" => Ok(Family::I),
        _ => Err(anyhow!("unknown family {name:?}; expected F, f, H or I")),
    }
}

fn pair(params: &[String]) -> Result<CoprimePair> {
    let p = expect(params, &["a", "b"])?;
    Ok(CoprimePair::new(int(&p[0])?, int(&p[1])?)?)
}

/// The bound mode implied by which of `--L`, `--M`, `--order` are given.
fn bound_mode(args: &EvalArgs) -> Result<BoundMode> {
    match (args.l, args.m, args.order) {
        (Some(l), Some(m), None) => Ok(BoundMode::Double { l, m }),
        (Some(l), None, None) => Ok(BoundMode::LimitM { l }),
        (None, Some(m), None) => Ok(BoundMode::LimitL { m }),
        (None, None, Some(order)) => Ok(BoundMode::LimitBoth { order }),
        _ => bail!("give --L and --M, or one of them for a one-sided limit, or --order alone"),
    }
}

fn fermionic(args: &EvalArgs, fam: Family, mode: BoundMode) -> Result<String> {
    let spec = FermionicSpec::new(pair(&args.params)?, fam, mode);
    Ok(match evaluate(&spec)? {
        FermionicValue::Poly(p) => p.to_string(),
        FermionicValue::Series(s) => s.as_poly().to_string(),
    })
}

fn render(args: &EvalArgs) -> Result<String> {
    let p = &args.params;
    match args.object {
        Object::Qbin => {
            let p = expect(p, &["n", "m"])?;
            if args.base < 1 {
                bail!("--base must be positive, got {}", args.base);
            }
            Ok(qbinomial(int(&p[0])?, int(&p[1])?, args.base).to_string())
        }
        Object::B => {
            let p = expect(p, &["L", "M", "a", "b"])?;
            Ok(b_kernel(int(&p[0])?, int(&p[1])?, int(&p[2])?, int(&p[3])?).to_string())
        }
        Object::G => {
            let p = expect(p, &["N", "M", "alpha", "beta", "K"])?;
            Ok(g_poly(
                int(&p[0])?,
                int(&p[1])?,
                rational(&p[2])?,
                rational(&p[3])?,
                int(&p[4])?,
            )?
            .to_string())
        }
        Object::D => {
            let p = expect(p, &["K", "i", "N", "M", "alpha", "beta"])?;
            let v = d_poly(
                int(&p[0])?,
                int(&p[1])?,
                int(&p[2])?,
                int(&p[3])?,
                rational(&p[4])?,
                rational(&p[5])?,
            )?;
            Ok(v.to_string())
        }
        Object::BigF => fermionic(args, Family::F, bound_mode(args)?),
        Object::LittleF => fermionic(args, Family::LittleF, bound_mode(args)?),
        Object::H => fermionic(args, Family::H, bound_mode(args)?),
        Object::I => fermionic(args, Family::I, bound_mode(args)?),
        Object::Ftilde => {
            let m = args.m.ok_or_else(|| anyhow!("Ftilde needs --M"))?;
            fermionic(args, Family::F, BoundMode::LimitL { m })
        }
        Object::Series => {
            let order = args.order.ok_or_else(|| anyhow!("series needs --order"))?;
            fermionic(args, family(&args.family)?, BoundMode::LimitBoth { order })
        }
    }
}
