//! End-to-end acceptance run: one PASS/FAIL line per criterion, exit status 1
//! if any criterion fails. Expected values are written out here rather than
//! taken from the library.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hermdes::reference::ReferenceEnumerator;
use hermdes_core::design_code::{affine_invariance_check, s_sets, HermitianDesign};
use hermdes_core::grm::{extended_grm_generator, grm_dimension_formula, grm_dual_code, grm_punctured_code, GrmParams};
use hermdes_core::hermitian::HermitianCode;
use hermdes_core::linalg::{
    low_weight_codewords, min_weight_search, weight_enumerator_exhaustive, weight_enumerator_naive, SearchMode,
};
use hermdes_core::{FieldTable, FpVector, GenMatrixCode, Gf3Vec};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

const OPS_CAP: u64 = 20_000_000_000;

type Verdict = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Verdict,
}

fn ensure(cond: bool, detail: String) -> Verdict {
    if cond {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn digit_sum(mut j: u64) -> u64 {
    let mut s = 0;
    while j > 0 {
        s += j % 3;
        j /= 3;
    }
    s
}

fn hermitian_parameters() -> Verdict {
    let mut seen = Vec::new();
    for (m, expected) in [(1, (9, 4, 5)), (2, (81, 7, 51))] {
        let g = HermitianCode::new(3, m).unwrap().generator_matrix::<Gf3Vec>();
        let d = min_weight_search(&g, SearchMode::Exact, OPS_CAP)
            .map_err(|e| e.to_string())?
            .distance;
        let got = (g.len(), g.dimension(), d);
        if got != expected {
            return Err(format!("m={m}: got {got:?}, expected {expected:?}"));
        }
        seen.push(format!("{got:?}"));
    }
    Ok(seen.join(", "))
}

fn hermitian_enumerator() -> Verdict {
    let code = HermitianCode::new(3, 2).unwrap();
    let g = code.generator_matrix::<Gf3Vec>();
    let gray = weight_enumerator_exhaustive(&g, 7).map_err(|e| e.to_string())?;
    let naive = weight_enumerator_naive(&g);
    let expected = "1 + 1296z^51 + 240z^54 + 648z^60 + 2z^81";
    let theory = code.theoretical_weight_distribution();
    ensure(
        gray.to_string() == expected && naive == gray && theory == gray,
        format!("gray={gray}; naive={naive}; table={theory}"),
    )
}

fn zero_counts() -> Verdict {
    let mut totals = Vec::new();
    for (p, m, triples) in [(3u8, 1u32, 81usize), (3, 2, 2187), (5, 1, 625)] {
        let code = HermitianCode::new(p, m).unwrap();
        let mut seen = 0;
        for idx in code.all_indices() {
            seen += 1;
            let (closed, direct) = (code.zero_count_closed_form(&idx), code.zero_count_direct(&idx));
            if closed != direct {
                return Err(format!("p={p} m={m} {idx:?}: closed {closed}, direct {direct}"));
            }
        }
        if seen != triples {
            return Err(format!("p={p} m={m}: visited {seen} triples, expected {triples}"));
        }
        totals.push(format!("({p},{m}):{seen}"));
    }
    Ok(format!("all agree on {}", totals.join(" ")))
}

fn design_parameters() -> Verdict {
    let design = HermitianDesign::new(2)
        .unwrap()
        .min_weight_design()
        .map_err(|e| e.to_string())?;
    let lambda = design.verify_t_design(2).map_err(|e| e.to_string())?;
    // pair counts by hand
    let mut pairs: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    let mut replication = vec![0usize; design.v];
    for block in &design.blocks {
        for (i, &x) in block.iter().enumerate() {
            replication[x as usize] += 1;
            for &y in &block[i + 1..] {
                *pairs.entry((x, y)).or_default() += 1;
            }
        }
    }
    let pair_values: std::collections::BTreeSet<usize> = pairs.values().copied().collect();
    let r_values: std::collections::BTreeSet<usize> = replication.iter().copied().collect();
    let k_values: std::collections::BTreeSet<usize> = design.blocks.iter().map(Vec::len).collect();
    let got = (
        design.v,
        design.blocks.len(),
        k_values,
        r_values,
        pair_values,
        pairs.len(),
    );
    let detail = format!(
        "(v,b,k,r,lambda)=({}, {}, {:?}, {:?}, {:?}), library lambda {lambda:?}",
        got.0, got.1, got.2, got.3, got.4
    );
    ensure(
        got.0 == 81
            && got.1 == 648
            && got.2 == [51].into()
            && got.3 == [408].into()
            && got.4 == [255].into()
            && got.5 == 81 * 80 / 2
            && lambda == Some(255),
        detail,
    )
}

fn dimension() -> Verdict {
    let mut ranks = Vec::new();
    for m in [2u32, 3] {
        let hd = HermitianDesign::new(m).unwrap();
        let design = hd.min_weight_design().map_err(|e| e.to_string())?;
        let rows = design.incidence_rows::<Gf3Vec>(3);
        let code = GenMatrixCode::from_rows(3, design.v, rows).map_err(|e| e.to_string())?;
        let formula = (9 * m * m + 7 * m) / 2 + 1;
        let blocks = design.blocks.len();
        if code.dimension() != formula as usize {
            return Err(format!(
                "m={m}: rank {} of {blocks}x{}, formula {formula}",
                code.dimension(),
                design.v
            ));
        }
        ranks.push(format!("m={m}: {blocks}x{} rank {}", design.v, code.dimension()));
    }
    let expected = ["m=2: 648x81 rank 26", "m=3: 18954x729 rank 52"];
    ensure(ranks == expected, ranks.join(", "))
}

fn generator_equivalence() -> Verdict {
    let mut out = Vec::new();
    for m in [2u32, 3] {
        let hd = HermitianDesign::new(m).unwrap();
        let n = hd.length();
        let incidence = hd.incidence_code().map_err(|e| e.to_string())?.to_digit_rows();
        let squared = GenMatrixCode::from_rows(3, n, hd.squared_generators())
            .unwrap()
            .to_digit_rows();
        let monomial = GenMatrixCode::from_rows(3, n, hd.trace_monomial_generators())
            .unwrap()
            .to_digit_rows();
        if incidence != squared || incidence != monomial {
            return Err(format!(
                "m={m}: ranks incidence {} squared {} trace-monomial {}",
                incidence.len(),
                squared.len(),
                monomial.len()
            ));
        }
        out.push(format!("m={m}: {} identical RREF rows", incidence.len()));
    }
    Ok(out.join(", "))
}

fn defining_set_route() -> Verdict {
    let hd = HermitianDesign::new(2).unwrap();
    let incidence = hd.incidence_code().map_err(|e| e.to_string())?;
    let structural = hd.defining_set_code().map_err(|e| e.to_string())?;
    ensure(
        structural.to_digit_rows() == incidence.to_digit_rows(),
        format!("dims {} vs {}", structural.dimension(), incidence.dimension()),
    )
}

fn s_set_counts() -> Verdict {
    for m in 2..=8u32 {
        let got = s_sets(m).counts();
        let m = m as usize;
        let expected = [2 * m, 2 * m * m, (2 * m + 1) * m, m * (m + 1) / 2];
        if got != expected {
            return Err(format!("m={m}: {got:?} vs {expected:?}"));
        }
    }
    Ok("m=2..8 match (2m, 2m^2, (2m+1)m, m(m+1)/2)".into())
}

fn design_code_distance() -> Verdict {
    let code = HermitianDesign::new(2)
        .unwrap()
        .incidence_code()
        .map_err(|e| e.to_string())?;
    let r = min_weight_search(&code, SearchMode::Exact, OPS_CAP).map_err(|e| e.to_string())?;
    let certified = r.levels.iter().find(|&&(_, lower, _)| lower >= 9).map(|&(w, _, _)| w);
    ensure(
        code.dimension() == 26
            && r.distance == 21
            && r.witness.weight() == 21
            && code.contains(&r.witness) == Ok(true)
            && certified.is_some(),
        format!(
            "d={} after {} ops, d>=9 certified at level {certified:?}",
            r.distance, r.ops
        ),
    )
}

fn grm_containment() -> Verdict {
    let hd = HermitianDesign::new(2).unwrap();
    let code = hd.incidence_code().map_err(|e| e.to_string())?;
    let grm4 = extended_grm_generator::<Gf3Vec>(hd.field(), 4);
    let grm2 = extended_grm_generator::<Gf3Vec>(hd.field(), 2);
    let monomials = |l| (0..81u64).filter(|&j| digit_sum(j) <= l).count();
    let hermitian = hd.hermitian().dimension();
    let in4 = code.is_subcode_of(&grm4).unwrap();
    let in2 = code.is_subcode_of(&grm2).unwrap();
    ensure(
        in4 && !in2 && hermitian == 7 && code.dimension() == 26 && grm4.dimension() == 50 && monomials(4) == 50,
        format!(
            "chain {hermitian} < {} < {} (monomial count {}); in order 4: {in4}; in order 2: {in2}",
            code.dimension(),
            grm4.dimension(),
            monomials(4)
        ),
    )
}

fn grm_formulas() -> Verdict {
    let mut failures = Vec::new();
    for m in 2..=4u32 {
        let field = FieldTable::builtin(3, m).unwrap();
        for l in 1..=4u32 {
            let params = GrmParams::new(3, l, m).unwrap();
            let formula = grm_dimension_formula(&params);
            let cyclic = grm_punctured_code(&params).dimension() as i64;
            let rank = extended_grm_generator::<Gf3Vec>(&field, l).dimension() as i64;
            let monomials = (0..3u64.pow(m)).filter(|&j| digit_sum(j) <= l as u64).count() as i64;
            if !(formula == cyclic && cyclic == rank && rank == monomials) {
                failures.push(format!(
                    "(l={l},m={m}) formula {formula}, n-|T| {cyclic}, rank {rank}, monomials {monomials}"
                ));
            }
        }
    }
    for m in [2u32, 4] {
        let field = FieldTable::builtin(3, m).unwrap();
        for l in 1..2 * m {
            let params = GrmParams::new(3, l, m).unwrap();
            let dual = grm_dual_code(&params).generator_matrix::<Gf3Vec>(&field).unwrap();
            let brute = grm_punctured_code(&params)
                .generator_matrix::<Gf3Vec>(&field)
                .unwrap()
                .orthogonal_complement();
            if dual.to_digit_rows() != brute.to_digit_rows() {
                failures.push(format!("dual mismatch at n={} l={l}", 3u32.pow(m) - 1));
            }
        }
    }
    if failures.is_empty() {
        Ok("12 dimension triples agree; duals agree for n=8, 80".into())
    } else {
        Err(failures.join("; "))
    }
}

fn proof_lemmas() -> Verdict {
    let mut notes = Vec::new();
    for m in [2u32, 3] {
        if let Some(t) = HermitianDesign::new(m).unwrap().trace_sum_violation() {
            return Err(format!("trace sums fail at m={m}, t={t}"));
        }
    }
    notes.push("trace sums m=2,3".to_string());
    let hd = HermitianDesign::new(2).unwrap();
    let (min, at) = hd.min_shift_solutions();
    if min < 1 {
        return Err(format!("no solution at {at:?}"));
    }
    notes.push(format!("min shift solutions {min}"));
    let code = hd.incidence_code().map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    let report = hd.span_memberships(&code, &mut rng, 100);
    if let Some(bad) = report.checks.iter().find(|c| c.failure.is_some()) {
        return Err(format!("{} fails at {:?}", bad.family, bad.failure));
    }
    notes.push(format!("{} span families", report.checks.len()));
    let hermitian = hd.hermitian().generator_matrix::<Gf3Vec>();
    for (label, c) in [("C(4,3)", &hermitian), ("design code", &code)] {
        let maps = affine_invariance_check(c, hd.field(), &mut rng, 100).map_err(|f| format!("{label}: {f:?}"))?;
        notes.push(format!("{label} invariant under {maps} maps"));
    }
    Ok(notes.join(", "))
}

fn reference_table() -> Verdict {
    let reference = ReferenceEnumerator::design_code_m2();
    let total = reference.total();
    let terms = reference.terms.len();
    let code = HermitianDesign::new(2)
        .unwrap()
        .incidence_code()
        .map_err(|e| e.to_string())?;
    let words = low_weight_codewords(&code, 21, OPS_CAP).map_err(|e| e.to_string())?;
    let low: Vec<u64> = (1..=21).map(|w| words.count(w)).collect();
    let computed_a21 = low[20];
    let below = low[..20].iter().sum::<u64>();
    ensure(
        terms == 55
            && total == 3u128.pow(26)
            && reference.count(0) == 1
            && reference.count(21) == 648
            && computed_a21 == 648
            && below == 0,
        format!(
            "{terms} terms sum to {total}; A0={}, shipped A21={}, computed A21={computed_a21}, words below 21: {below}",
            reference.count(0),
            reference.count(21)
        ),
    )
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            name: "Hermitian code parameters",
            limit: Some(Duration::from_secs(5)),
            run: hermitian_parameters,
        },
        Criterion {
            id: 2,
            name: "weight enumerator of C(4,3)",
            limit: Some(Duration::from_secs(1)),
            run: hermitian_enumerator,
        },
        Criterion {
            id: 3,
            name: "closed-form zero counts",
            limit: Some(Duration::from_secs(30)),
            run: zero_counts,
        },
        Criterion {
            id: 4,
            name: "design extraction",
            limit: Some(Duration::from_secs(10)),
            run: design_parameters,
        },
        Criterion {
            id: 5,
            name: "design code dimension",
            limit: Some(Duration::from_secs(120)),
            run: dimension,
        },
        Criterion {
            id: 6,
            name: "generator equivalence",
            limit: None,
            run: generator_equivalence,
        },
        Criterion {
            id: 7,
            name: "defining-set route",
            limit: None,
            run: defining_set_route,
        },
        Criterion {
            id: 8,
            name: "S-set counts",
            limit: Some(Duration::from_secs(1)),
            run: s_set_counts,
        },
        Criterion {
            id: 9,
            name: "design code minimum distance",
            limit: Some(Duration::from_secs(600)),
            run: design_code_distance,
        },
        Criterion {
            id: 10,
            name: "GRM containment",
            limit: Some(Duration::from_secs(30)),
            run: grm_containment,
        },
        Criterion {
            id: 11,
            name: "GRM formulas",
            limit: None,
            run: grm_formulas,
        },
        Criterion {
            id: 12,
            name: "proof-lemma property suite",
            limit: Some(Duration::from_secs(120)),
            run: proof_lemmas,
        },
        Criterion {
            id: 13,
            name: "reference table consistency",
            limit: None,
            run: reference_table,
        },
    ];
    let mut failed = Vec::new();
    for c in &criteria {
        let start = Instant::now();
        let verdict = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match (verdict, c.limit) {
            (Ok(d), Some(limit)) if elapsed > limit => Err(format!("{d}; took {elapsed:.2?}, limit {limit:?}")),
            (v, _) => v,
        };
        let limit = c.limit.map_or("none".to_string(), |l| format!("{l:?}"));
        match verdict {
            Ok(detail) => println!(
                "PASS criterion {}: {} [{elapsed:.2?}, limit {limit}] {detail}",
                c.id, c.name
            ),
            Err(detail) => {
                println!(
                    "FAIL criterion {}: {} [{elapsed:.2?}, limit {limit}] {detail}",
                    c.id, c.name
                );
                failed.push(c.id);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed.len(),
        criteria.len()
    );
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failed: {failed:?}");
        ExitCode::FAILURE
    }
}
