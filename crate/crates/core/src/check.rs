//! Per-quiver cross-validation and the all-orientations sweep.
//!
//! `run_check` computes every quantity the crate knows about for a single
//! orientation and re-derives each one along its independent second route,
//! recording named pass/fail verdicts. The theory says every check passes;
//! any failure is an internal-consistency event (CLI exit code 2) and the
//! report carries a minimal witness string.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::dynkin::{all_types, Quiver, QuiverJson};
use crate::error::Result;
use crate::mat::IntMat;
use crate::numerics::{dim_sum, hom_table, knit_all, object_dimvec, trick_check, EulerData};
use crate::rigid::{
    dim_end, dim_end_via_graded, dual_summands, graded_quiver, rigidity_certificate,
    summand_dimvec, summand_dimvec_via_hom, total_dimvec, RelationKind,
};
use crate::seed::{
    adapted_ordering, btilde, btilde_prime, comparison_matches, kplus_and_e, lowering_exponents,
    minor_label, ordering_is_adapted, seed_positions, theta, weight_consistency,
};
use crate::weyl::{verify_longest_adapted, WeightVector};
use crate::zq::{nakayama, sigma, Window, ZqVertex};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub quiver: QuiverJson,
    pub r: usize,
    pub h: i64,
    #[serde(rename = "N")]
    pub n_exponents: BTreeMap<usize, i64>,
    pub euler: i64,
    #[serde(rename = "dimEnd")]
    pub dim_end: i64,
    pub rigid: bool,
    pub word: Vec<usize>,
    pub e: Vec<i64>,
    pub checks: BTreeMap<String, bool>,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn all_pass(&self) -> bool {
        self.checks.values().all(|&v| v)
    }
}

/// Runs every cross-validation for one orientation. `seed` drives the
/// sampled translation-identity checks.
pub fn run_check(quiver: &Quiver, seed: u64) -> Result<CheckReport> {
    let t = quiver.dynkin();
    let n = t.rank;
    let h = t.coxeter_number();
    let window = Window::build(quiver)?;
    let ed = EulerData::build(quiver);
    let hom = hom_table(&window, &ed)?;
    let ordering = adapted_ordering(&window);
    let cert = rigidity_certificate(&window, &ed);
    let (kplus, e) = kplus_and_e(&ordering.word, n);

    let mut checks: BTreeMap<String, bool> = BTreeMap::new();
    let mut failures: Vec<String> = Vec::new();
    fn record_in(
        checks: &mut BTreeMap<String, bool>,
        failures: &mut Vec<String>,
        name: &str,
        ok: bool,
        witness: String,
    ) {
        checks.insert(name.to_string(), ok);
        if !ok {
            failures.push(format!("{name}: {witness}"));
        }
    }
    macro_rules! record {
        ($name:expr, $ok:expr, $witness:expr $(,)?) => {
            record_in(&mut checks, &mut failures, $name, $ok, $witness)
        };
    }

    // diagram-level identities
    let mu_ok = (1..=n).all(|q| t.mu(t.mu(q)) == q);
    record!("mu_involution", mu_ok, format!("{t}"));

    let cartan = t.cartan();
    let mut esum = IntMat::zero(n);
    let et = ed.e.transpose();
    for i in 0..n {
        for j in 0..n {
            esum.set(i, j, ed.e.get(i, j) + et.get(i, j));
        }
    }
    record!("cartan_euler_sum", esum == cartan, format!("{quiver}"));

    record!(
        "coxeter_order",
        ed.phi.pow(h as u32) == IntMat::identity(n),
        format!("{quiver}"),
    );

    // translation-quiver identities
    let n_sum = (1..=n).all(|q| window.exponent(q) + window.exponent(t.mu(q)) == h - 2);
    record!("n_sum", n_sum, format!("{quiver}"));
    record!(
        "root_count",
        window.len() == t.positive_roots(),
        format!("{} objects", window.len()),
    );

    let mut mesh_ok = true;
    for (idx, &x) in window.objects().iter().enumerate() {
        if window.is_projective(x) {
            continue;
        }
        let tx = window.index_of(x.tau(1)).unwrap();
        let mut a = window.in_neighbors(idx);
        let mut b = window.out_neighbors(tx);
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            mesh_ok = false;
            failures.push(format!("mesh_symmetry: at ({},{})", x.column, x.vertex));
            break;
        }
    }
    checks.insert("mesh_symmetry".into(), mesh_ok);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sigma_ok = true;
    let mut commute_ok = true;
    for _ in 0..1000 {
        let v = ZqVertex::new(rng.gen_range(-60..=60), rng.gen_range(1..=n));
        if sigma(quiver, sigma(quiver, v)) != v.tau(-h) {
            sigma_ok = false;
        }
        if nakayama(quiver, v.tau(1)) != nakayama(quiver, v).tau(1) {
            commute_ok = false;
        }
    }
    record!(
        "sigma_squared_is_tau_minus_h",
        sigma_ok,
        format!("{quiver}")
    );
    record!("nakayama_tau_commute", commute_ok, format!("{quiver}"));

    // dimension vectors two ways, positivity, root multiset
    let knit = knit_all(&window, &ed)?;
    let mut knit_ok = true;
    let mut roots: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut roots_ok = true;
    for &x in window.objects() {
        let d = object_dimvec(&window, &ed, x)?;
        if knit[&(x.column, x.vertex)] != d {
            knit_ok = false;
            failures.push(format!("knit_agrees: at ({},{})", x.column, x.vertex));
            break;
        }
        let cd = cartan.matvec(&d);
        let tits: i64 = d.iter().zip(cd.iter()).map(|(&a, &b)| a * b).sum();
        if tits != 2 || d.iter().any(|&v| v < 0) || !roots.insert(d.clone()) {
            roots_ok = false;
        }
    }
    checks.insert("knit_agrees".into(), knit_ok);
    record!(
        "root_multiset",
        roots_ok && roots.len() == t.positive_roots(),
        format!("{quiver}"),
    );

    // endpoint identity phi^{N(q)} i_q = p_{mu(q)}
    let endpoint_ok =
        (1..=n).all(|q| ed.phi_injective(window.exponent(q), q) == *ed.projective_dim(t.mu(q)));
    record!("coxeter_endpoint", endpoint_ok, format!("{quiver}"));

    // Hom identities
    let diag_ok = (0..window.len()).all(|i| hom[i][i] == 1);
    record!("hom_diagonal", diag_ok, format!("{quiver}"));
    let trick = trick_check(&window, &ed);
    record!(
        "hom_trick_vanishing",
        trick.is_none(),
        format!("witness {trick:?}"),
    );

    // rigid-module data two ways
    let mut summand_ok = true;
    let mut total_acc = vec![0i64; n];
    for &x in window.objects() {
        let a = summand_dimvec(&window, &ed, x)?;
        let b = summand_dimvec_via_hom(&window, &hom, x);
        if a != b {
            summand_ok = false;
            failures.push(format!("summand_oracle: at ({},{})", x.column, x.vertex));
            break;
        }
        for (u, v) in total_acc.iter_mut().zip(a.iter()) {
            *u += v;
        }
    }
    checks.insert("summand_oracle".into(), summand_ok);
    let total = total_dimvec(&window, &ed);
    record!(
        "total_is_summand_sum",
        total == total_acc,
        format!("{quiver}")
    );

    let end_formula = dim_end(&window, &ed);
    let end_graded = dim_end_via_graded(&window, &hom);
    record!(
        "dim_end_oracle",
        end_formula == end_graded,
        format!("{end_formula} vs {end_graded}"),
    );
    record!(
        "rigidity",
        cert.rigid,
        format!("euler {} vs dimEnd {}", cert.euler, cert.dim_end),
    );

    // weighted self-consistency of the total-dimension formula
    let weighted: i64 = (1..=n)
        .map(|q| {
            (0..=window.exponent(q))
                .map(|i| (i + 1) * dim_sum(&ed.phi_injective(i, q)))
                .sum::<i64>()
        })
        .sum();
    record!(
        "total_weighted_sum",
        dim_sum(&total) == weighted,
        format!("{quiver}"),
    );

    // graded quiver shape
    let gq = graded_quiver(&window);
    let mesh_count = gq
        .relations
        .iter()
        .filter(|r| r.kind == RelationKind::Mesh)
        .count();
    let zero_at_projectives = gq
        .relations
        .iter()
        .filter(|r| r.kind == RelationKind::Zero)
        .all(|r| window.is_projective(r.source));
    record!(
        "graded_counts",
        gq.arrows1.len() == window.len() - n
            && mesh_count == window.len() - n
            && zero_at_projectives,
        format!("{quiver}"),
    );

    // word and seed data
    let rep = verify_longest_adapted(&ordering.word, quiver);
    record!(
        "word_longest_adapted",
        rep.is_longest && rep.is_adapted,
        format!("{:?}", ordering.word),
    );
    record!(
        "ordering_forward_hom",
        ordering_is_adapted(&window, &hom, &ordering),
        format!("{quiver}"),
    );

    let th = theta(&ordering);
    let image: BTreeSet<i64> = th.values().copied().collect();
    let mut expected_image: BTreeSet<i64> = e.iter().copied().collect();
    expected_image.extend(-(n as i64)..=-1);
    record!(
        "theta_bijection",
        image == expected_image && th.len() == window.len(),
        format!("{quiver}"),
    );

    let nonexchangeable_letters: BTreeSet<usize> = (1..=window.len() as i64)
        .filter(|k| !e.contains(k))
        .map(|k| ordering.word[k as usize - 1])
        .collect();
    record!(
        "nonexchangeable_letters",
        e.len() == window.len() - n && nonexchangeable_letters == (1..=n).collect(),
        format!("{quiver}"),
    );

    let b = btilde(&ordering.word, &t);
    let bp = btilde_prime(&ordering.word, &t);
    let entries_ok = b.iter().flatten().all(|&v| (-1..=1).contains(&v));
    let col_sums_ok = (0..e.len()).all(|c| {
        let s: i64 = b.iter().map(|row| row[c]).sum();
        (-4..=4).contains(&s)
    });
    record!(
        "b_matrix_shape",
        b.len() == window.len() + n
            && bp.len() == window.len()
            && b.iter()
                .chain(bp.iter())
                .all(|row| row.len() == window.len() - n)
            && entries_ok
            && col_sums_ok,
        format!("{quiver}"),
    );

    let frozen_ok = (1..=n).all(|q| {
        let m = minor_label(&t, &ordering.word, -(q as i64));
        let mut want = vec![0i64; n];
        want[t.mu(q) - 1] = -1;
        m.weight.0 == want
    });
    record!("frozen_minor_weights", frozen_ok, format!("{quiver}"));
    let nonexch_ok = (1..=window.len() as i64)
        .filter(|k| !e.contains(k))
        .all(|k| {
            let m = minor_label(&t, &ordering.word, k);
            m.weight == WeightVector::fundamental(n, m.fundamental)
        });
    record!(
        "nonexchangeable_minor_weights",
        nonexch_ok,
        format!("{quiver}")
    );

    let wc = weight_consistency(&window, &ed, &ordering)?;
    record!(
        "weight_consistency",
        wc.iter().all(|&(_, ok)| ok),
        format!(
            "failing positions {:?}",
            wc.iter()
                .filter(|&&(_, ok)| !ok)
                .map(|&(j, _)| j)
                .collect::<Vec<_>>()
        ),
    );

    let lowering_ok = seed_positions(n, window.len()).into_iter().all(|k| {
        let m = minor_label(&t, &ordering.word, k);
        let suffix: Vec<usize> = if k < 0 {
            ordering.word.clone()
        } else {
            ordering.word[k as usize..].to_vec()
        };
        lowering_exponents(&t, &suffix, &WeightVector::fundamental(n, m.fundamental))
            .iter()
            .all(|&v| v >= 0)
    });
    record!("lowering_nonnegative", lowering_ok, format!("{quiver}"));

    record!(
        "seed_quiver_from_window",
        comparison_matches(&window, &ordering),
        format!("{quiver}"),
    );

    // duality against the opposite orientation
    let op = quiver.opposite();
    let wop = Window::build(&op)?;
    let edop = EulerData::build(&op);
    let mut duals: Vec<Vec<i64>> = dual_summands(&window, &hom)
        .into_iter()
        .map(|(_, d)| d)
        .collect();
    duals.sort();
    let mut op_sums: Vec<Vec<i64>> = wop
        .objects()
        .iter()
        .map(|&x| summand_dimvec(&wop, &edop, x))
        .collect::<Result<_>>()?;
    op_sums.sort();
    record!("duality_multiset", duals == op_sums, format!("{quiver}"));

    // k+ never points before its own position
    let kplus_ok = kplus.iter().all(|(&k, &l)| l > k);
    record!("kplus_monotone", kplus_ok, format!("{quiver}"));

    Ok(CheckReport {
        quiver: quiver.to_json(),
        r: window.len(),
        h,
        n_exponents: (1..=n).map(|q| (q, window.exponent(q))).collect(),
        euler: cert.euler,
        dim_end: cert.dim_end,
        rigid: cert.rigid,
        word: ordering.word.clone(),
        e: e.into_iter().collect(),
        checks,
        failures,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepSummary {
    pub max_rank: usize,
    pub quivers: usize,
    pub all_pass: bool,
    pub failures: Vec<String>,
}

/// Runs [`run_check`] over every orientation of every type up to
/// `max_rank`, fanning out over a bounded worker pool.
pub fn sweep(max_rank: usize, seed: u64, workers: usize) -> Result<SweepSummary> {
    let mut quivers = Vec::new();
    for t in all_types(max_rank) {
        quivers.extend(Quiver::all_orientations(t));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| crate::error::Error::InternalInconsistency(e.to_string()))?;
    let results: Vec<Result<(String, bool, Vec<String>)>> = pool.install(|| {
        use rayon::prelude::*;
        quivers
            .par_iter()
            .map(|q| {
                let rep = run_check(q, seed)?;
                Ok((q.to_string(), rep.all_pass(), rep.failures))
            })
            .collect()
    });
    let total = quivers.len();
    let mut failures = Vec::new();
    for r in results {
        let (name, ok, f) = r?;
        if !ok {
            failures.push(format!("{name}: {}", f.join("; ")));
        }
    }
    failures.sort();
    Ok(SweepSummary {
        max_rank,
        quivers: total,
        all_pass: failures.is_empty(),
        failures,
    })
}
