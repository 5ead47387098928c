//! Acceptance suite. Runs every criterion, prints one line per criterion and
//! exits nonzero if any fails.

use std::collections::BTreeMap;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use modrep_core::dimvec::{enumerate_admissible, max_simp_dim, westbury_dim};
use modrep_core::ext_deform::{deformation_tangent_dim, ext1_dim_simples, min_codim};
use modrep_core::mie::{
    involution_closed, involution_forward, mie_count_closed, mie_count_enumerate, mie_count_gf,
    stabilizer_dim,
};
use modrep_core::rep::{
    diagonalize_triangular, is_simple, one_dim, three_dim, three_dim_simple_predicted, two_dim_m,
    two_dim_n, verify_relations,
};
use modrep_core::series::{codim_sequence, maxdim_gf, modular_forms_gf};
use modrep_core::{Cyclotomic, DimVector, FreeEntries, Matrix, Rational, Sign, SignPattern};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_modrep");

type Check = Result<String, String>;

/// (id, name, check, time limit in seconds)
type Criterion = (&'static str, &'static str, fn() -> Check, u64);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn c(s: &str) -> Cyclotomic {
    s.parse().unwrap()
}

fn dv(s: &str) -> DimVector {
    s.parse().unwrap()
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env_remove("MODREP_ORDER")
        .output()
        .expect("failed to launch modrep")
}

fn run_json(args: &[&str]) -> Result<Value, String> {
    let out = run(args);
    ensure!(
        out.status.success(),
        "modrep {args:?} exited with {:?}",
        out.status.code()
    );
    serde_json::from_slice::<Value>(&out.stdout)
        .map(|v| v["result"].clone())
        .map_err(|e| e.to_string())
}

fn random_cyc(rng: &mut ChaCha8Rng) -> Cyclotomic {
    Cyclotomic::new(
        Rational::new(rng.gen_range(-5..=5).into(), rng.gen_range(1..=4).into()),
        Rational::new(rng.gen_range(-5..=5).into(), rng.gen_range(1..=3).into()),
    )
}

fn random_pattern(n: usize, rng: &mut ChaCha8Rng) -> SignPattern {
    SignPattern::new(
        (0..n)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            })
            .collect(),
    )
    .unwrap()
}

fn random_free(p: &SignPattern, rng: &mut ChaCha8Rng) -> FreeEntries {
    p.free_positions()
        .into_iter()
        .map(|q| (q, random_cyc(rng)))
        .collect()
}

fn ac1() -> Check {
    let alpha = "(2,2,2;3,3)";
    let dim = run_json(&["dim", alpha])?;
    ensure!(dim["d"] == 7, "dim returned {}", dim["d"]);
    let codim = run_json(&["codim", alpha])?;
    ensure!(codim["codim"] == 2, "codim returned {}", codim["codim"]);
    ensure!(
        codim["beta"] == "(2,2,1;3,2)" && codim["gamma"] == "(0,0,1;0,1)",
        "witness was beta={} gamma={}",
        codim["beta"],
        codim["gamma"]
    );
    ensure!(
        codim["deformation_tangent_dim"] == 5,
        "cli tangent dim {}",
        codim["deformation_tangent_dim"]
    );
    let t = deformation_tangent_dim(&dv("(2,2,1;3,2)"), &dv("(0,0,1;0,1)"))
        .map_err(|e| e.to_string())?;
    ensure!(t == 5, "deformation_tangent_dim returned {t}");
    Ok("d=7, codim=2 at beta=(2,2,1;3,2) gamma=(0,0,1;0,1), tangent dim 5".into())
}

fn ac2() -> Check {
    let g = maxdim_gf(50).map_err(|e| e.to_string())?;
    for n in 1..=50u64 {
        let want = Rational::from_integer(max_simp_dim(n).unwrap().into());
        ensure!(
            g.coeff(n as usize) == want,
            "n={n}: series {} vs closed form {want}",
            g.coeff(n as usize)
        );
    }
    for n in 1..=12u64 {
        let best = enumerate_admissible(n)
            .unwrap()
            .iter()
            .map(|a| westbury_dim(a).unwrap())
            .max()
            .unwrap();
        ensure!(
            best == max_simp_dim(n).unwrap(),
            "n={n}: exhaustive max {best}"
        );
    }
    Ok("closed form = series coefficients for n<=50, = exhaustive max for n<=12".into())
}

// Grid for the three-dimensional family. The product-one points are where the
// printed criterion prod(l_i^3 + 1) != 0 applies; the product minus one points
// are checked against prod(l_i^3 - 1) != 0.
fn lambda_grid(product: i64) -> Vec<[Cyclotomic; 3]> {
    let base = [
        "1", "-1", "2", "-w", "w^2", "1/2", "-w^2", "3", "-1/3", "1+w",
    ]
    .map(c);
    let mut out = Vec::new();
    for (i, a) in base.iter().enumerate() {
        for b in &base[i..] {
            let l3 = Cyclotomic::from_int(product).checked_div(&(a * b)).unwrap();
            out.push([a.clone(), b.clone(), l3]);
        }
    }
    // spread the 20 points across the whole list
    let step = out.len() / 20;
    out.into_iter().step_by(step).take(20).collect()
}

fn ac3() -> Check {
    for p in 0..3u8 {
        for s in [Sign::Plus, Sign::Minus] {
            let r = one_dim(p, s).map_err(|e| e.to_string())?;
            ensure!(
                verify_relations(&r) && is_simple(&r).unwrap(),
                "one-dim ({p},{s})"
            );
        }
    }
    let mut two_dim = 0;
    for p in [1u8, 2] {
        let z = Cyclotomic::omega_pow(p as i64);
        let exceptional = [
            Cyclotomic::from_int(0),
            (&z - &Cyclotomic::from_int(1)).scale(&Rational::from_integer(2.into())),
        ];
        let mut grid: Vec<Cyclotomic> = [
            "1", "-1", "2", "1/2", "w", "w^2", "-3", "1+w", "3*w-1", "-2/3",
        ]
        .map(c)
        .to_vec();
        grid.extend(exceptional.iter().cloned());
        for s in &grid {
            let expected = !exceptional.contains(s);
            for (name, r) in [("M", two_dim_m(s, p)), ("N", two_dim_n(s, p))] {
                let r = r.map_err(|e| e.to_string())?;
                ensure!(
                    verify_relations(&r),
                    "{name}_{s} power {p} fails the relations"
                );
                ensure!(
                    is_simple(&r).unwrap() == expected,
                    "{name}_{s} power {p}: simplicity verdict"
                );
                two_dim += 1;
            }
        }
    }
    let mut non_simple = 0;
    let plus = lambda_grid(1);
    ensure!(plus.len() == 20, "grid size {}", plus.len());
    for l in &plus {
        let r = three_dim(&l[0], &l[1], &l[2]).map_err(|e| e.to_string())?;
        ensure!(verify_relations(&r), "three_dim{l:?} fails the relations");
        let simple = is_simple(&r).unwrap();
        let criterion = l
            .iter()
            .all(|x| x.pow(3) + Cyclotomic::from_int(1) != Cyclotomic::from_int(0));
        ensure!(
            simple == criterion,
            "three_dim{l:?}: simple={simple}, criterion={criterion}"
        );
        non_simple += usize::from(!simple);
    }
    ensure!(non_simple > 0, "grid never hits the non-simple locus");
    for l in &lambda_grid(-1) {
        let r = three_dim(&l[0], &l[1], &l[2]).map_err(|e| e.to_string())?;
        ensure!(verify_relations(&r), "three_dim{l:?} fails the relations");
        let predicted = three_dim_simple_predicted(&l[0], &l[1], &l[2]).unwrap();
        ensure!(
            is_simple(&r).unwrap() == predicted,
            "three_dim{l:?} on the product -1 component"
        );
    }
    Ok(format!(
        "6 one-dim, {two_dim} two-dim, 20 three-dim points ({non_simple} non-simple) on l1l2l3=1; \
         20 more on l1l2l3=-1 with prod(l^3-1)"
    ))
}

fn ac4() -> Check {
    let ones = enumerate_admissible(1).unwrap();
    ensure!(ones.len() == 6, "{} one-dim vectors", ones.len());
    let mut pairs = 0;
    for b in &ones {
        for g in &ones {
            let e = ext1_dim_simples(b, g, b == g).map_err(|e| e.to_string())?;
            let want = i64::from(b.x() != g.x() && b.y() != g.y());
            ensure!(e == want, "Ext^1({b},{g}) = {e}, expected {want}");
            pairs += 1;
        }
    }
    Ok(format!("{pairs} ordered pairs"))
}

fn ac5() -> Check {
    let mut count = 0;
    for n in 1..=15u64 {
        for a in enumerate_admissible(n).unwrap() {
            let d = westbury_dim(&a).unwrap();
            ensure!((n as i64 + d) % 2 != 0, "{a}: n + d even");
            let closed = mie_count_closed(&a).map_err(|e| e.to_string())?;
            let en = mie_count_enumerate(&a).unwrap();
            let gf = mie_count_gf(&a).unwrap();
            ensure!(closed == en && en == gf, "{a}: {closed} {en} {gf}");
            count += 1;
        }
    }
    Ok(format!("{count} admissible vectors with n<=15"))
}

fn ac6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x2d07);
    for t in 0..100 {
        let n = rng.gen_range(1..=10);
        let p = random_pattern(n, &mut rng);
        let y = involution_forward(&p, &random_free(&p, &mut rng))
            .map_err(|e| format!("trial {t}: {e}"))?;
        ensure!(
            y.is_upper_triangular() && y.mul(&y).unwrap().is_identity(),
            "trial {t}: Y^2 != I"
        );
    }
    for t in 0..50 {
        let n = rng.gen_range(1..=7);
        let p = random_pattern(n, &mut rng);
        let free = random_free(&p, &mut rng);
        let f = involution_forward(&p, &free).unwrap();
        let cl = involution_closed(&p, &free).map_err(|e| e.to_string())?;
        ensure!(f == cl, "trial {t}: closed form differs for pattern {p}");
    }
    let mut patterns = 0;
    for n in 1..=10usize {
        for mask in 0u32..(1 << n) {
            let p = SignPattern::new(
                (0..n)
                    .map(|i| {
                        if mask >> i & 1 == 0 {
                            Sign::Plus
                        } else {
                            Sign::Minus
                        }
                    })
                    .collect(),
            )
            .unwrap();
            let (b1, b2) = p.multiplicities();
            ensure!(p.free_positions().len() as u64 == b1 * b2, "pattern {p}");
            patterns += 1;
        }
    }
    Ok(format!(
        "100 forward, 50 closed-vs-forward, {patterns} patterns"
    ))
}

fn brute_stabilizer(mult: [u64; 3]) -> usize {
    let eig: Vec<Cyclotomic> = (0..3)
        .flat_map(|i| std::iter::repeat_n(Cyclotomic::omega_pow(i as i64), mult[i] as usize))
        .collect();
    let n = eig.len();
    if n == 0 {
        return 0;
    }
    let x = Matrix::diagonal(&eig);
    let rows: Vec<Vec<Cyclotomic>> = (0..n * n)
        .map(|k| {
            let e = Matrix::unit(n, k / n, k % n);
            e.mul(&x)
                .unwrap()
                .sub(&x.mul(&e).unwrap())
                .unwrap()
                .entries()
                .to_vec()
        })
        .collect();
    Matrix::from_rows(rows).unwrap().nullity()
}

fn ac7() -> Check {
    let mut triples = 0;
    for a1 in 0..=8u64 {
        for a2 in 0..=8 - a1 {
            for a3 in 0..=8 - a1 - a2 {
                let m = [a1, a2, a3];
                let closed = stabilizer_dim(m).unwrap() as usize;
                let brute = brute_stabilizer(m);
                ensure!(closed == brute, "{m:?}: closed {closed}, nullity {brute}");
                triples += 1;
            }
        }
    }
    Ok(format!("{triples} multiplicity triples"))
}

fn ac8() -> Check {
    let f = modular_forms_gf(100).unwrap();
    for n in 1..=100u64 {
        let want = Rational::from_integer(codim_sequence(n).unwrap().into());
        ensure!(
            f.coeff(n as usize) == want,
            "n={n}: f={} codim={want}",
            f.coeff(n as usize)
        );
    }
    let mut components = 0;
    for n in 2..=10u64 {
        let top = max_simp_dim(n).unwrap();
        for a in enumerate_admissible(n).unwrap() {
            if westbury_dim(&a).unwrap() != top {
                continue;
            }
            let (c, _) = min_codim(&a).map_err(|e| e.to_string())?;
            ensure!(c == codim_sequence(n).unwrap(), "{a}: min_codim {c}");
            components += 1;
        }
    }
    Ok(format!("f(n)=codim(n) for n<=100; min_codim on {components} maximal components, 2<=n<=10 (n=1 has no split)"))
}

fn ac9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x07a1);
    for t in 0..50 {
        let n = rng.gen_range(1..=6);
        let diag: Vec<Cyclotomic> = (0..n)
            .map(|_| Cyclotomic::omega_pow(rng.gen_range(0..3)))
            .collect();
        let mut v = Matrix::identity(n);
        for i in 0..n {
            for j in i + 1..n {
                v[(i, j)] = random_cyc(&mut rng);
            }
        }
        let d = Matrix::diagonal(&diag);
        let z = v.inverse().unwrap().mul(&d).unwrap().mul(&v).unwrap();
        ensure!(
            z.is_upper_triangular(),
            "trial {t}: conjugate not triangular"
        );
        let u = diagonalize_triangular(&z).map_err(|e| format!("trial {t}: {e}"))?;
        let out = u.inverse().unwrap().mul(&z).unwrap().mul(&u).unwrap();
        ensure!(out == d, "trial {t}: result is not the original diagonal");
    }
    Ok("50 round trips".into())
}

fn cli_commands() -> Vec<Vec<&'static str>> {
    let fam = r#"{"n":2,"X":[["1","1"],["0","w"]],"Y":[["1","0"],["1","-1"]]}"#;
    let mut cmds: Vec<Vec<&str>> = vec![
        vec!["dim", "(2,2,2;3,3)"],
        vec!["maxdim", "37"],
        vec!["enumerate", "7"],
        vec!["family", "one-dim", "2", "-"],
        vec!["family", "m", "1+w", "1"],
        vec!["family", "n", "-2/3", "2"],
        vec!["family", "three", "2", "-w", "1/2*w^2"],
        vec!["check-simple", fam],
        vec!["codim", "(2,2,2;3,3)"],
        vec!["mie-count", "(3,2,2;4,3)"],
        vec!["involution", "-+-+-", "1,2=2;2,3=w;1,4=-1/2"],
        vec!["family", "three", "-1", "2", "1/2"],
        vec!["involution", "+-+", "1,2=2;2,3=3", "--method", "closed"],
        vec!["stabilizer", "2,1,0"],
        vec!["ind-summary", "(2,2,2;3,3)", "+-+-+-"],
        vec!["series", "--which", "maxdim", "--order", "30"],
        vec!["series", "--which", "modular", "--order", "12"],
        vec!["series", "--which", "mie", "--alpha", "(2,2,2;3,3)"],
    ];
    let text: Vec<Vec<&str>> = cmds
        .iter()
        .map(|c| c.iter().copied().chain(["--text"]).collect())
        .collect();
    cmds.extend(text);
    cmds
}

fn ac10() -> Check {
    let cmds = cli_commands();
    for args in &cmds {
        let a = run(args);
        let b = run(args);
        ensure!(
            a.status.success(),
            "{args:?} failed: {}",
            String::from_utf8_lossy(&a.stderr)
        );
        ensure!(
            a.status.code() == b.status.code(),
            "{args:?}: exit codes differ"
        );
        ensure!(a.stdout == b.stdout, "{args:?}: outputs differ");
    }
    Ok(format!("{} invocations, each run twice", cmds.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("AC1", "worked example (2,2,2;3,3)", ac1, 1),
        ("AC2", "max simple-locus dimension", ac2, 10),
        ("AC3", "explicit families", ac3, 30),
        ("AC4", "Ext table for one-dim simples", ac4, 1),
        ("AC5", "iterated-extension counts", ac5, 60),
        ("AC6", "upper-triangular involutions", ac6, 30),
        ("AC7", "centralizer dimension", ac7, 10),
        ("AC8", "codimension / modular forms identity", ac8, 60),
        ("AC9", "triangular diagonalization", ac9, 10),
        ("AC10", "CLI determinism", ac10, 600),
    ];
    let mut failures = BTreeMap::new();
    for (id, name, check, limit) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > Duration::from_secs(limit) => Err(format!(
                "{detail}, but took {elapsed:.2?} (limit {limit} s)"
            )),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("[PASS] {id} {name}: {detail} ({elapsed:.2?})"),
            Err(why) => {
                println!("[FAIL] {id} {name}: {why} ({elapsed:.2?})");
                failures.insert(id, why);
            }
        }
    }
    if !failures.is_empty() {
        eprintln!("{} acceptance criteria failed", failures.len());
        std::process::exit(1);
    }
}
