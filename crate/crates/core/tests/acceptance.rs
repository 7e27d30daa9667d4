//! Acceptance run: one PASS/FAIL line per criterion. Runs without the test harness so
//! the lines are always printed.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use boxtensor_core::actions::{check_full_compatibility, check_half_compatibility, ActionSystem, Elem, Regime};
use boxtensor_core::catalog::{klein_four_system, named_groups};
use boxtensor_core::derived::{
    check_cyclic_derivative_abelian, compatible_side, crossed_module_phi, homology, verify_deviation_bounds,
    verify_expansion_identities, verify_quotient_map, verify_tensor_identities,
};
use boxtensor_core::fp::{coset_group, EnumLimits, Presentation};
use boxtensor_core::group::construct::{cyclic, dihedral, klein_four, product_of, symmetric3};
use boxtensor_core::group::is_isomorphic;
use boxtensor_core::sweep::{enumerate_systems, orbit_representatives, Family, SystemEntry};
use boxtensor_core::tensor::{compute_tensor, verify_free_product_construction, TensorKind, TensorSpec};
use boxtensor_core::FiniteGroup;

const A: usize = 1;
const B: usize = 2;
const AB: usize = 3;

type Outcome = Result<String, String>;

fn limits() -> EnumLimits {
    EnumLimits::with_max_cosets(1_000_000)
}

fn catalog_groups() -> Vec<(&'static str, FiniteGroup)> {
    vec![("C2", cyclic(2)), ("C4", cyclic(4)), ("V4", klein_four()), ("S3", symmetric3()), ("D4", dihedral(4))]
}

/// Orbit representatives of a family over all 25 ordered pairs of catalog groups.
fn catalog(family: Family) -> Vec<(String, SystemEntry)> {
    let groups = catalog_groups();
    let mut out = Vec::new();
    for (gn, g) in &groups {
        for (hn, h) in &groups {
            let entries = enumerate_systems(g, h, family).expect("catalog groups are in range");
            for (e, _) in orbit_representatives(g, h, entries).expect("families are closed under relabeling") {
                out.push((format!("{gn}/{hn} {:?}", e.index), e));
            }
        }
    }
    out
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion1() -> Outcome {
    let v4 = klein_four();
    let c4c2 = product_of(&[cyclic(4), cyclic(2)]);
    let mut slowest = Duration::ZERO;
    for (name, fixed, order, expected) in
        [("psi_ab", AB, 8, &c4c2), ("psi_b", B, 4, &v4), ("psi_a", A, 4, &v4)]
    {
        let sys = klein_four_system(fixed);
        let t0 = Instant::now();
        let t = compute_tensor(&sys, TensorSpec::direct(TensorKind::Box), limits()).map_err(|e| e.to_string())?;
        let dt = t0.elapsed();
        slowest = slowest.max(dt);
        ensure(t.order() == order, || format!("{name}: order {}", t.order()))?;
        ensure(is_isomorphic(&t.group, expected).unwrap().is_some(), || format!("{name}: wrong isomorphism type"))?;
        ensure(dt < Duration::from_secs(5), || format!("{name}: took {dt:?}"))?;
    }
    Ok(format!("orders 8, 4, 4 with C4 x C2, C2 x C2, C2 x C2; slowest {slowest:?}"))
}

fn criterion2() -> Outcome {
    let r = check_full_compatibility(&klein_four_system(AB));
    ensure(r.regime == Regime::FullyCompatible && r.per_condition.values().all(|&b| b), || {
        "psi_ab not fully compatible".into()
    })?;
    for (name, fixed, x) in [("psi_b", B, A), ("psi_a", A, B)] {
        let r = check_full_compatibility(&klein_four_system(fixed));
        let w = r.first_witness().ok_or(format!("{name}: no witness"))?;
        let e = |side, index| Elem { side, index };
        let [s1, s2, s3] = w.condition.sides();
        ensure(w.tuple == [e(s1, x), e(s2, x), e(s3, x)], || format!("{name}: witness {:?}", w.tuple))?;
        ensure(w.lhs.index == x && w.rhs.index == AB, || format!("{name}: sides {:?} vs {:?}", w.lhs, w.rhs))?;
    }
    Ok("psi_ab fully compatible; psi_b (a,a,a): a vs ab; psi_a (b,b,b): b vs ab".into())
}

fn criterion3(full: &[(String, SystemEntry)]) -> Outcome {
    let t0 = Instant::now();
    for (label, e) in full {
        let r = verify_free_product_construction(&e.system, limits()).map_err(|err| format!("{label}: {err}"))?;
        ensure(r.passed(), || format!("{label}: {:?}", r.mismatches))?;
    }
    let dt = t0.elapsed();
    ensure(dt < Duration::from_secs(600), || format!("took {dt:?}"))?;
    Ok(format!("{} orbit representatives, zero failures, {dt:.1?}", full.len()))
}

/// The classical tensor product of finite abelian groups, from cyclic decompositions:
/// `C_m ⊗ C_n = C_gcd(m,n)`, distributed over direct sums.
fn abelian_tensor(a: &[usize], b: &[usize]) -> FiniteGroup {
    fn gcd(x: usize, y: usize) -> usize {
        if y == 0 {
            x
        } else {
            gcd(y, x % y)
        }
    }
    let factors: Vec<FiniteGroup> = a.iter().flat_map(|&m| b.iter().map(move |&n| cyclic(gcd(m, n)))).collect();
    product_of(&factors)
}

fn criterion4() -> Outcome {
    let cases: [(&str, FiniteGroup, &[usize], FiniteGroup, &[usize]); 4] = [
        ("C2,C2", cyclic(2), &[2], cyclic(2), &[2]),
        ("C4,C2", cyclic(4), &[4], cyclic(2), &[2]),
        ("C6,C4", cyclic(6), &[6], cyclic(4), &[4]),
        ("V4,C2", klein_four(), &[2, 2], cyclic(2), &[2]),
    ];
    let mut orders = Vec::new();
    for (name, g, gd, h, hd) in cases {
        let oracle = abelian_tensor(gd, hd);
        let sys = ActionSystem::conjugation_trivial(g, h);
        for kind in [TensorKind::Box, TensorKind::BrownLoday, TensorKind::Inassaridze] {
            let t = compute_tensor(&sys, TensorSpec::direct(kind), limits()).map_err(|e| e.to_string())?;
            ensure(is_isomorphic(&t.group, &oracle).unwrap().is_some(), || {
                format!("{name} {}: order {} vs oracle {}", kind.as_str(), t.order(), oracle.order())
            })?;
        }
        orders.push(format!("{name}: {}", oracle.order()));
    }
    Ok(format!("all three kinds match the oracle ({})", orders.join(", ")))
}

fn criterion5(full: &[(String, SystemEntry)]) -> Outcome {
    let mut nontrivial = 0;
    for (label, e) in full {
        let s = &e.system;
        let fail = |what: &str| format!("{label}: {what}");
        let t = compute_tensor(s, TensorSpec::direct(TensorKind::Box), limits()).map_err(|e| fail(&e.to_string()))?;
        let ids = verify_tensor_identities(s, &t).map_err(|e| fail(&e.to_string()))?;
        let exp = verify_expansion_identities(s, &t).map_err(|e| fail(&e.to_string()))?;
        for f in ids.families.iter().chain(&exp.families) {
            ensure(f.passed(), || fail(&format!("{} first failure {:?}", f.name, f.first_failure)))?;
        }
        nontrivial += usize::from(ids.families.iter().any(|f| f.nontrivial_witness));
        let dev = verify_deviation_bounds(s).map_err(|e| fail(&e.to_string()))?;
        ensure(dev.passed(), || fail("deviation bounds"))?;
        let cm = crossed_module_phi(s, &t).map_err(|e| fail(&e.to_string()))?;
        ensure(cm.report.passed(), || fail(&format!("crossed module {:?}", cm.report)))?;
    }
    Ok(format!(
        "{} systems, every family exhaustive; {} needed nontrivial deviational witnesses",
        full.len(),
        nontrivial
    ))
}

fn criterion6(full: &[(String, SystemEntry)]) -> Outcome {
    let (mut cyclic_count, mut nonabelian) = (0, 0);
    for (label, e) in full {
        let t = compute_tensor(&e.system, TensorSpec::direct(TensorKind::Box), limits()).map_err(|e| e.to_string())?;
        let r = check_cyclic_derivative_abelian(&e.system, &t).map_err(|e| e.to_string())?;
        ensure(r.holds(), || format!("{label}: cyclic reduced derivative with nonabelian tensor"))?;
        cyclic_count += usize::from(r.reduced_cyclic);
        nonabelian += usize::from(!r.tensor_abelian);
    }
    Ok(format!(
        "{} systems, {cyclic_count} with cyclic reduced derivative, {nonabelian} nonabelian tensors, zero counterexamples",
        full.len()
    ))
}

fn criterion7() -> Outcome {
    let (mut runs, mut reduced, mut largest) = (0, 0, 0);
    for (label, e) in catalog(Family::Conjugation) {
        let s = &e.system;
        let trivial_sigma = s.sigma_g().iter().all(|r| r.iter().enumerate().all(|(i, &x)| i == x));
        let half = check_half_compatibility(s).regime.is_half_compatible();
        if !trivial_sigma && !half {
            continue;
        }
        let t = compute_tensor(s, TensorSpec::direct(TensorKind::Inassaridze), limits())
            .map_err(|err| format!("{label}: {err}"))?;
        runs += 1;
        largest = largest.max(t.stats.peak_cosets);
        if let Some(side) = compatible_side(s) {
            let r = verify_quotient_map(s, side, limits()).map_err(|err| format!("{label}: {err}"))?;
            if r.x_prime_order > 1 {
                reduced += 1;
                ensure(r.passed(), || format!("{label}: {r:?}"))?;
            }
        }
    }
    Ok(format!(
        "{runs} Inassaridze products enumerated (peak {largest} cosets); {reduced} quotient maps with X' nontrivial, all surjective"
    ))
}

/// Elementwise evaluation of `f(g ⊗ a) = ^g a a^-1` over the whole tensor group by
/// breadth-first search from the identity along the generators.
fn criterion8() -> Outcome {
    let sys = ActionSystem::conjugation_trivial(cyclic(2), cyclic(2));
    let t = compute_tensor(&sys, TensorSpec::direct(TensorKind::Inassaridze), limits()).map_err(|e| e.to_string())?;
    let a = sys.h();
    let mut f = vec![usize::MAX; t.order()];
    f[0] = 0;
    let mut queue = vec![0];
    while let Some(x) = queue.pop() {
        for g in sys.g().elements() {
            for y in a.elements() {
                let image = a.mul(sys.sigma_g()[g][y], a.inv(y));
                let z = t.group.mul(x, t.pairing[g][y]);
                if f[z] == usize::MAX {
                    f[z] = a.mul(f[x], image);
                    queue.push(z);
                }
            }
        }
    }
    let kernel = f.iter().filter(|&&v| v == 0).count();
    let mut image: Vec<usize> = f.clone();
    image.sort_unstable();
    image.dedup();
    let coker = a.order() / image.len();
    let h = homology(&sys, limits()).map_err(|e| e.to_string())?;
    let c2 = cyclic(2);
    ensure(kernel == 2 && coker == 2, || format!("oracle gives kernel {kernel}, cokernel {coker}"))?;
    ensure(h.h1.order() == kernel && is_isomorphic(&h.h1, &c2).unwrap().is_some(), || "H1".into())?;
    ensure(h.h0.order() == coker && is_isomorphic(&h.h0, &c2).unwrap().is_some(), || "H0".into())?;
    Ok("H1 ≅ C2 and H0 ≅ C2, matching elementwise evaluation of f".into())
}

fn criterion9() -> Outcome {
    let groups = named_groups(16);
    for (name, g) in &groups {
        let p = Presentation::from_cayley_table(g);
        let e = coset_group(&p, limits()).map_err(|err| format!("{name}: {err}"))?;
        ensure(is_isomorphic(&e.group, g).unwrap().is_some(), || format!("{name}: round trip not isomorphic"))?;
    }
    Ok(format!("{} catalog groups of order at most 16 round-trip", groups.len()))
}

fn run(n: usize, f: impl FnOnce() -> Outcome) -> bool {
    let t0 = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
    });
    let dt = t0.elapsed();
    match outcome {
        Ok(msg) => {
            println!("criterion {n}: PASS ({dt:.1?}) {msg}");
            true
        }
        Err(msg) => {
            println!("criterion {n}: FAIL ({dt:.1?}) {msg}");
            false
        }
    }
}

fn main() {
    let full = catalog(Family::FullyCompatible);
    let results = [
        run(1, criterion1),
        run(2, criterion2),
        run(3, || criterion3(&full)),
        run(4, criterion4),
        run(5, || criterion5(&full)),
        run(6, || criterion6(&full)),
        run(7, criterion7),
        run(8, criterion8),
        run(9, criterion9),
    ];
    let passed = results.iter().filter(|&&b| b).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
