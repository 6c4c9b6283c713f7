use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use hxdft::conic::fit_conic;
use hxdft::io::{format_root, format_signal, read_root, read_signal, SignalData};
use hxdft::root::builtin_roots;
use hxdft::{dft1d, dft2d_two_sided, phasor_path, AlgebraTag, Direction, MatrixRoot, Provenance};

use crate::args::{
    BenchArgs, EllipseArgs, RootsArgs, Transform1dArgs, Transform2dArgs, VerifyArgs,
};
use crate::{bench, snap, verify, DEFAULT_SEED};

/// Writes to `path`, or stdout when absent.
fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn load_root(path: &Path) -> Result<MatrixRoot> {
    read_root(path).with_context(|| format!("loading root {}", path.display()))
}

fn load_signal(path: &Path) -> Result<SignalData> {
    read_signal(path).with_context(|| format!("loading signal {}", path.display()))
}

pub fn roots(args: &RootsArgs) -> Result<()> {
    if args.list {
        let mut out = String::new();
        for (name, root) in builtin_roots() {
            writeln!(out, "# {name} ({0}x{0}, {1})", root.n(), root.field())?;
            out.push_str(&format_root(&root)?);
        }
        return emit(args.output.as_deref(), &out);
    }
    let kind = args
        .kind
        .as_deref()
        .expect("clap requires kind without --list");
    let mut root = snap::build_root(kind, &args.params)?;
    if args.matrix {
        root = root.with_provenance(Provenance::UserSupplied);
    }
    emit(args.output.as_deref(), &format_root(&root)?)
}

pub fn transform1d(args: &Transform1dArgs, direction: Direction) -> Result<()> {
    let SignalData::OneD(f) = load_signal(&args.signal)? else {
        bail!(
            "{} holds a 2D signal; use fwd2d/inv2d",
            args.signal.display()
        );
    };
    let j = load_root(&args.root)?;
    let out = dft1d(&f, &j, direction, args.scale.into())?;
    emit(args.output.as_deref(), &format_signal(&out.into()))
}

pub fn transform2d(args: &Transform2dArgs, direction: Direction) -> Result<()> {
    let SignalData::TwoD(f) = load_signal(&args.signal)? else {
        bail!("{} holds a 1D signal; use fwd/inv", args.signal.display());
    };
    let j = load_root(&args.left)?;
    let k = load_root(&args.right)?;
    let out = dft2d_two_sided(&f, &j, &k, direction, args.scale.into())?;
    emit(args.output.as_deref(), &format_signal(&out.into()))
}

/// Prints the report; returns whether every property passed.
pub fn verify(args: &VerifyArgs) -> Result<bool> {
    let seed = args.seed.unwrap_or(DEFAULT_SEED);
    let (algebras, generic) = if args.algebra.is_empty() {
        (AlgebraTag::ALL.to_vec(), true)
    } else {
        (args.algebra.clone(), false)
    };
    let results = verify::run(&verify::Suite::new(seed), &algebras, generic);
    let mut out = String::new();
    for r in &results {
        writeln!(out, "{r}")?;
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    writeln!(
        out,
        "# seed={seed} properties={} failed={failed}",
        results.len()
    )?;
    emit(None, &out)?;
    Ok(failed == 0)
}

pub fn ellipse(args: &EllipseArgs) -> Result<()> {
    if args.coeff == [0.0, 0.0] {
        bail!("degenerate path: coefficient vector is (0, 0)");
    }
    let j = load_root(&args.root)?;
    let points = phasor_path(&j, args.u0, args.m_len, args.coeff)?;
    let fit = fit_conic(&points).context("fitting conic to phasor path")?;
    let mut out = String::from("x,y\n");
    for [x, y] in &points {
        writeln!(out, "{x:.16e},{y:.16e}")?;
    }
    let c = fit.conic.coeffs;
    writeln!(
        out,
        "# conic A,B,C,D,E,F = {:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
        c[0], c[1], c[2], c[3], c[4], c[5]
    )?;
    writeln!(out, "# residual = {:.3e}", fit.residual)?;
    writeln!(out, "# discriminant = {:.16e}", fit.conic.discriminant())?;
    emit(None, &out)
}

pub fn bench(args: &BenchArgs) -> Result<()> {
    let root = builtin_roots()
        .into_iter()
        .map(|(_, r)| r)
        .find(|r| r.provenance() == Provenance::AlgebraEmbedding(args.algebra))
        .expect("every algebra has a built-in root");
    let rows = bench::run(
        args.algebra,
        &root,
        &args.sizes,
        args.seed.unwrap_or(DEFAULT_SEED),
    )?;
    emit(None, &bench::format_table(&rows))
}
