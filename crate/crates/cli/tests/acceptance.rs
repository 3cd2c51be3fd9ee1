//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p polystoch-cli --test acceptance`.

use std::collections::BTreeSet;
use std::process::{Command, Output};
use std::time::Instant;

use polystoch::{
    are_equivalent, bound_report, catalog, check_support_bound, dot, dot_plane_equivalence_check,
    enumerate_vertices, is_vertex, kronecker, log2_lower_bound, log2_upper_bound_leading,
    mcmullen_upper_bound, non_vertex_certificate, random_multidim_permutation, sample_vertex,
    serialize_matrix, MultiMatrix, Rational, OMEGA_3_4_REPRESENTATIVES,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polystoch"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let o = cli(&["enumerate", "-n", "3", "-d", "3", "--classes"]);
    ensure(o.status.code() == Some(0), format!("exit {:?}", o.status.code()))?;
    let text = String::from_utf8_lossy(&o.stdout).to_string();
    ensure(text.contains("vertices: 66\n"), "vertex count is not 66")?;
    ensure(text.contains("classes: 2\n"), "class count is not 2")?;
    let sizes: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("class "))
        .map(|l| l.split_whitespace().nth(3).unwrap_or(""))
        .collect();
    ensure(sizes == ["12", "54"], format!("class sizes {sizes:?}"))?;
    let secs = start.elapsed().as_secs_f64();
    ensure(secs <= 600.0, format!("took {secs:.1}s"))?;
    Ok(format!("66 vertices, classes 12 + 54, {secs:.1}s"))
}

fn criterion_2() -> Check {
    let ms: Vec<MultiMatrix> = OMEGA_3_4_REPRESENTATIVES
        .iter()
        .map(|n| catalog(n))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    for (name, m) in OMEGA_3_4_REPRESENTATIVES.iter().zip(&ms) {
        ensure(m.is_polystochastic(), format!("{name} not polystochastic"))?;
        ensure(is_vertex(m).map_err(err)?, format!("{name} not a vertex"))?;
    }
    let supports: Vec<usize> = ms.iter().map(MultiMatrix::support_size).collect();
    ensure(supports == [27, 49, 51, 52, 58, 61], format!("supports {supports:?}"))?;
    let mut pairs = 0;
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            ensure(
                !are_equivalent(&ms[i], &ms[j]).map_err(err)?,
                format!("{} ~ {}", OMEGA_3_4_REPRESENTATIVES[i], OMEGA_3_4_REPRESENTATIVES[j]),
            )?;
            pairs += 1;
        }
    }
    ensure(pairs == 15, "pair count")?;
    Ok("6 vertices, supports 27 49 51 52 58 61, 15 pairs non-equivalent".into())
}

fn criterion_3() -> Check {
    let m = catalog("M3_3").map_err(err)?;
    let v = catalog("V3_3").map_err(err)?;
    ensure(is_vertex(&kronecker(&m, &v).map_err(err)?).map_err(err)?, "M ⊗ V not a vertex")?;
    for seed in 0..20u64 {
        for d in [2, 3] {
            let p = random_multidim_permutation(3, d, seed);
            let pv = dot(&p, &v).map_err(err)?;
            ensure(is_vertex(&pv).map_err(err)?, format!("dot(P, V) seed {seed} d {d}"))?;
        }
    }
    for (label, bad) in [
        ("V ⊗ V", kronecker(&v, &v).map_err(err)?),
        ("dot(V, V)", dot(&v, &v).map_err(err)?),
    ] {
        ensure(!is_vertex(&bad).map_err(err)?, format!("{label} is a vertex"))?;
        let cert = non_vertex_certificate(&bad)
            .map_err(err)?
            .ok_or(format!("{label}: no certificate"))?;
        ensure(cert.verify(&bad), format!("{label}: certificate rejected"))?;
    }
    Ok("40 dot products and M ⊗ V are vertices; 2 certificates verified".into())
}

fn criterion_4() -> Check {
    let v = catalog("V3_3").map_err(err)?;
    let target = catalog("M33_dot_V33").map_err(err)?;
    let mv = dot(&catalog("M3_3").map_err(err)?, &v).map_err(err)?;
    ensure(are_equivalent(&mv, &target).map_err(err)?, "dot(M, V) not equivalent")?;
    let perms: Vec<MultiMatrix> = enumerate_vertices(3, 3)
        .map_err(err)?
        .into_iter()
        .filter(MultiMatrix::is_permutation)
        .collect();
    ensure(perms.len() == 12, format!("{} permutations", perms.len()))?;
    let hits = perms
        .iter()
        .filter(|p| dot(p, &v).is_ok_and(|c| c == target))
        .count();
    ensure(hits > 0, "no permutation reproduces the transcription")?;
    Ok(format!("equivalent; {hits} of 12 permutations bit-equal"))
}

fn criterion_5() -> Check {
    let m = catalog("M3_3").map_err(err)?;
    let v = catalog("V3_3").map_err(err)?;
    ensure(dot_plane_equivalence_check(&m, &v).map_err(err)?, "M, V")?;
    for seed in 0..10u64 {
        let p = random_multidim_permutation(3, 2 + (seed % 2) as usize, 100 + seed);
        let b = if seed % 2 == 0 { &v } else { &m };
        ensure(
            dot_plane_equivalence_check(&p, b).map_err(err)?,
            format!("seed {seed}"),
        )?;
    }
    Ok("M, V and 10 seeded pairs".into())
}

fn criterion_6() -> Check {
    let start = Instant::now();
    for (n, d) in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)] {
        for vtx in enumerate_vertices(n, d).map_err(err)? {
            ensure(check_support_bound(&vtx), format!("enumerated ({n},{d}) over bound"))?;
        }
    }
    let mut max_support = 0;
    for seed in 0..200u64 {
        let s = sample_vertex(3, 4, seed);
        ensure(s.support_size() <= 65, format!("seed {seed}: support {}", s.support_size()))?;
        ensure(is_vertex(&s).map_err(err)?, format!("seed {seed}: not a vertex"))?;
        max_support = max_support.max(s.support_size());
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs <= 300.0, format!("took {secs:.1}s"))?;
    Ok(format!("200 samples of (3,4), max support {max_support}, {secs:.1}s"))
}

/// Every (0,1) polystochastic matrix, from all bit patterns.
fn brute_force_permutations(n: usize, d: usize) -> BTreeSet<String> {
    let cells = n.pow(d as u32);
    let line_sums_one = |bits: u32| {
        let stride = |axis: usize| n.pow((d - 1 - axis) as u32);
        (0..d).all(|axis| {
            (0..cells)
                .filter(|k| (k / stride(axis)) % n == 0)
                .all(|base| (0..n).filter(|i| bits >> (base + i * stride(axis)) & 1 == 1).count() == 1)
        })
    };
    (0u32..1 << cells)
        .filter(|&bits| line_sums_one(bits))
        .map(|bits| {
            let entries = (0..cells)
                .map(|k| Rational::from_integer(((bits >> k) & 1).into()))
                .collect();
            serialize_matrix(&MultiMatrix::new(n, d, entries).unwrap())
        })
        .collect()
}

fn criterion_7() -> Check {
    let mut counts = Vec::new();
    for (n, d, expected) in [(2, 2, 2), (2, 3, 2), (2, 4, 2), (3, 2, 6)] {
        let got: BTreeSet<String> = enumerate_vertices(n, d)
            .map_err(err)?
            .iter()
            .map(serialize_matrix)
            .collect();
        let oracle = brute_force_permutations(n, d);
        ensure(oracle.len() == expected, format!("oracle ({n},{d}) has {}", oracle.len()))?;
        ensure(got == oracle, format!("({n},{d}) differs from brute force"))?;
        counts.push(got.len());
    }
    Ok(format!("vertex counts {counts:?} match brute force"))
}

/// `C(top, k)` from Pascal's triangle in `u128`.
fn pascal(top: usize, k: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..top {
        let mut next = vec![1u128];
        next.extend(row.windows(2).map(|w| w[0] + w[1]));
        next.push(1);
        row = next;
    }
    row.get(k).copied().unwrap_or(0)
}

fn mcmullen_oracle(n: usize, d: usize) -> u128 {
    let k = n.pow(d as u32);
    let m = (n - 1).pow(d as u32);
    pascal(k - m.div_ceil(2), k - m) + pascal(k - (m + 2) / 2, k - m)
}

fn criterion_8() -> Check {
    for (n, d, expected) in [(2, 2, 2u128), (3, 3, 10395)] {
        let got = mcmullen_upper_bound(n, d).to_string();
        ensure(got == expected.to_string(), format!("mcmullen({n},{d}) = {got}"))?;
        ensure(mcmullen_oracle(n, d) == expected, format!("oracle({n},{d})"))?;
    }
    ensure(10395 >= 66, "bound below census")?;
    let six = log2_lower_bound(6, 3).ok_or("no bound for n=6")?;
    let seven = log2_lower_bound(7, 3).ok_or("no bound for n=7")?;
    ensure(six.exact.map(|v| v.to_string()) == Some("9".into()), "log2_lower(6,3)")?;
    ensure(seven.exact.map(|v| v.to_string()) == Some("6".into()), "log2_lower(7,3)")?;
    // leading terms evaluated independently
    let oracle = |n: f64, d: f64| {
        let m = (n - 1.0).powf(d);
        d * m / 2.0 * (n.ln() - (n - 1.0).ln()) / 2f64.ln() + m / 2.0 * (1.0 + 1.0 / 2f64.ln())
    };
    for (n, d) in [(2, 3), (3, 3), (3, 4), (5, 6)] {
        let got = log2_upper_bound_leading(n, d);
        ensure(
            (got - oracle(n as f64, d as f64)).abs() <= 1e-9 * got.abs().max(1.0),
            format!("log2_upper_leading({n},{d}) = {got}"),
        )?;
        ensure(got == log2_upper_bound_leading(n, d), "not reproducible")?;
    }
    Ok("mcmullen 2 and 10395, log2_lower 9 and 6, leading terms within 1e-9".into())
}

fn criterion_9() -> Check {
    let one = cli(&["--json", "enumerate", "-n", "3", "-d", "3", "--classes", "--threads", "1"]);
    let four = cli(&["--json", "enumerate", "-n", "3", "-d", "3", "--classes", "--threads", "4"]);
    ensure(one.status.code() == Some(0) && four.status.code() == Some(0), "enumerate failed")?;
    ensure(one.stdout == four.stdout, "threads 1 and 4 differ")?;
    let args = ["sample", "-n", "3", "-d", "4", "--seed", "17", "--count", "5"];
    let a = cli(&args);
    let b = cli(&args);
    ensure(a.status.code() == Some(0) && !a.stdout.is_empty(), "sample failed")?;
    ensure(a.stdout == b.stdout, "sample output differs between runs")?;
    let s1 = cli(&["survey", "-n", "3", "-d", "3", "--seeds", "10", "--seed0", "3", "--threads", "1"]);
    let s4 = cli(&["survey", "-n", "3", "-d", "3", "--seeds", "10", "--seed0", "3", "--threads", "4"]);
    ensure(s1.stdout == s4.stdout, "survey threads differ")?;
    Ok(format!("enumerate output {} bytes identical; samples identical", one.stdout.len()))
}

fn criterion_10() -> Check {
    for (n, d) in [(3, 3), (4, 5)] {
        let r = bound_report(n, d);
        let text = r.to_text();
        ensure(
            text.contains("(leading terms)") && text.contains("tail dropped"),
            format!("({n},{d}) report lacks the leading-terms flag"),
        )?;
    }
    let four = log2_lower_bound(4, 5).ok_or("no bound for n=4")?;
    ensure(four.tail_dropped, "n=4 lower bound not flagged")?;
    let json: serde_json::Value = serde_json::from_str(&bound_report(4, 5).to_json()).map_err(err)?;
    ensure(json["log2_lower"]["tail_dropped"] == true, "JSON flag missing")?;
    Ok("asymptotic values flagged as leading terms only".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 omega(3,3) census", criterion_1),
        ("2 omega(3,4) catalog", criterion_2),
        ("3 product constructions", criterion_3),
        ("4 dot reproduction", criterion_4),
        ("5 plane equivalence", criterion_5),
        ("6 support bound", criterion_6),
        ("7 small polytope oracles", criterion_7),
        ("8 bounds", criterion_8),
        ("9 determinism", criterion_9),
        ("10 asymptotic flags", criterion_10),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                println!("FAIL criterion {name}: {why}");
                failed.push(name);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed: {failed:?}");
        std::process::exit(1);
    }
}
