//! End-to-end acceptance run. Prints one line per criterion and exits
//! nonzero if any of them fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use qtree::algebra::{QPoly, QRat, XPoly};
use qtree::pawn::{coloring_poly, solve_omega_bar, solve_pawn, ColoringMode};
use qtree::trees::{canonicalize, Tree};
use qtree::verify::{
    check_bernoulli, check_classical_q1, check_corolla_denominator, check_newton_sweep,
    check_oracle_agreement, check_partition_conjecture, check_theorem, check_zeta, CheckConfig,
    CheckReport, OracleBounds, Theorem,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn p(c: &[i64]) -> QPoly {
    QPoly::from_ints(c)
}

fn prod(ps: &[QPoly]) -> QPoly {
    ps.iter().fold(QPoly::one(), |acc, x| acc.mul_ref(x))
}

/// `a(q) + b(q) x`
fn lin(a: &[i64], b: &[i64]) -> XPoly {
    XPoly::linear(QRat::from_poly(p(a)), QRat::from_poly(p(b)))
}

fn over(factors: &[XPoly], den: &QPoly) -> XPoly {
    let num = factors.iter().fold(XPoly::one(), |acc, f| acc.mul_ref(f));
    num.scale(&QRat::new(QPoly::one(), den.clone()).unwrap())
}

fn tree(enc: &str) -> Tree {
    canonicalize(enc).unwrap()
}

const PHI2: &[i64] = &[1, 1];
const PHI3: &[i64] = &[1, 1, 1];
const PHI4: &[i64] = &[1, 0, 1];
const PHI5: &[i64] = &[1, 1, 1, 1, 1];

fn expect_eq<T: PartialEq + std::fmt::Display>(what: &str, got: &T, want: &T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn first_pawn_terms() -> Outcome {
    let s = solve_pawn(3);
    let a = lin(&[1], &[0, 1]);
    let b = lin(&[1, 1], &[0, 0, 1]);
    let printed = [
        ("()", over(std::slice::from_ref(&a), &QPoly::one())),
        ("(())", over(&[a.clone(), b.clone()], &p(PHI2))),
        ("((()))", over(&[a.clone(), b.clone(), lin(&[1, 1, 1], &[0, 0, 0, 1])], &prod(&[p(PHI2), p(PHI3)]))),
        ("(()())", over(&[a, b, lin(&[1, 1, 1], &[0, 0, 1, 1])], &prod(&[p(PHI2), p(PHI3)]))),
    ];
    for (enc, want) in &printed {
        expect_eq(enc, &s.coeff(tree(enc)), want)?;
    }
    Ok(format!("{} coefficients", printed.len()))
}

fn first_omega_bar_terms() -> Outcome {
    let s = solve_omega_bar(4);
    let one = |den: &[&[i64]]| QRat::new(QPoly::one(), prod(&den.iter().map(|d| p(d)).collect::<Vec<_>>())).unwrap();
    let printed = [
        ("()", QRat::one()),
        ("(())", one(&[PHI2])),
        ("((()))", one(&[PHI3])),
        ("(()())", one(&[PHI2, PHI3])),
        ("(((())))", one(&[PHI2, PHI4])),
        ("((()()))", one(&[PHI3, PHI4])),
        ("(()(()))", one(&[PHI2, PHI3, PHI4])),
        ("(()()())", QRat::new(p(&[1, -1]), prod(&[p(PHI2), p(PHI3), p(PHI4)])).unwrap()),
    ];
    if s.len() != printed.len() {
        return Err(format!("{} nonzero coefficients, expected {}", s.len(), printed.len()));
    }
    for (enc, want) in &printed {
        expect_eq(enc, &s.coeff(tree(enc)), want)?;
    }
    Ok("8 coefficients".into())
}

fn six_vertex_tree() -> Outcome {
    let t = Tree::graft(vec![Tree::vertex(), Tree::corolla(2)]);
    let q = |c: &[i64]| QRat::from_poly(p(c));
    let last = XPoly::from_coeffs(vec![
        q(&[1, 2, 3, 4, 4, 3, 2, 1]),
        q(&[0, 0, 1, 3, 6, 6, 5, 4, 2]),
        q(&[0, 0, 0, 0, 0, 1, 2, 2, 2, 1]),
    ]);
    let qint = |n: usize| p(&vec![1; n]);
    let want = over(
        &[lin(&[1], &[0, 1]), lin(&[1, 1], &[0, 0, 1]), lin(&[1, 1, 1], &[0, 0, 0, 1]), last],
        &prod(&[qint(2), qint(3), qint(4), qint(5)]),
    );
    expect_eq("pawn", &solve_pawn(6).coeff(t), &want)?;
    expect_eq("F^(1)", &coloring_poly(t, 1, ColoringMode::Weak), &p(&[1, 1, 2, 3, 3, 1]))?;
    expect_eq(
        "G^(3)",
        &coloring_poly(t, 3, ColoringMode::Strict),
        &p(&[0, 0, 0, 1, 2, 2, 4, 4, 3, 1]),
    )?;
    let ob = QRat::new(p(&[1, 1, 0, -1]), prod(&[p(PHI2), p(PHI3), p(PHI4), p(PHI5)])).unwrap();
    expect_eq("omega_bar", &solve_omega_bar(6).coeff(t), &ob)?;
    Ok(format!("tree {t}"))
}

fn from_reports(reports: Vec<CheckReport>) -> Outcome {
    let mut summary = Vec::new();
    for r in &reports {
        if !r.passed() {
            return Err(format!(
                "{} {:?}: {}",
                r.name,
                r.status,
                r.witness.as_ref().map_or_else(|| r.note.clone().unwrap_or_default(), |w| w.to_string())
            ));
        }
        summary.push(format!("{}={}", r.name, r.checked));
    }
    Ok(summary.join(" "))
}

fn oracles() -> Outcome {
    let bounds = OracleBounds::default();
    let r = check_oracle_agreement(7, 3, &bounds);
    from_reports(vec![r])
}

fn theorem_sweeps() -> Outcome {
    let base = CheckConfig::default();
    let at = |max_order: usize| CheckConfig { max_order, ..base.clone() };
    let plan = [
        (Theorem::ValuesAtNonnegativeIntegers, CheckConfig { n_range: (2, 4), ..at(6) }),
        (Theorem::ValuesAtNegativeIntegers, CheckConfig { n_range: (2, 4), ..at(6) }),
        (Theorem::LimitAtMinusOneOverQ, at(6)),
        (Theorem::UmbraOfChildren, at(7)),
        (Theorem::UmbraOfGraft, at(7)),
        (Theorem::HahnAction, at(6)),
        (Theorem::KnownFactors, at(8)),
        (Theorem::LeadingCoefficient, at(8)),
        (Theorem::InverseOfE, CheckConfig { seeds: vec![1, 2, 3], ..at(6) }),
        (Theorem::CoverType, CheckConfig { cover_max_size: 9, ..at(6) }),
    ];
    from_reports(plan.iter().map(|(t, cfg)| check_theorem(*t, cfg)).collect())
}

fn conjectures() -> Outcome {
    let big = Tree::graft(vec![Tree::partition(&[1]); 5]);
    if big.size() != 11 {
        return Err(format!("partition tree for k = 5 has {} vertices, expected 11", big.size()));
    }
    from_reports(vec![
        check_corolla_denominator(12),
        check_newton_sweep(8),
        check_partition_conjecture(&[1], 3, 11),
        check_partition_conjecture(&[1], 5, 11),
    ])
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_qtree"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{args:?} exited with {}", out.status));
    }
    Ok(out.stdout)
}

fn determinism() -> Outcome {
    let args = ["compute", "pawn", "--order", "6", "--format", "json"];
    let first = run_cli(&args)?;
    let second = run_cli(&args)?;
    if first != second {
        return Err("two default runs differ".into());
    }
    let mut single = vec!["--workers", "1"];
    single.extend_from_slice(&args);
    if run_cli(&single)? != first {
        return Err("single-worker run differs from the default pool".into());
    }
    Ok(format!("{} bytes, identical", first.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("first pawn terms", first_pawn_terms),
        ("first omega_bar terms", first_omega_bar_terms),
        ("six-vertex tree (()(()()))", six_vertex_tree),
        ("oracle equivalence", oracles),
        ("theorem sweeps", theorem_sweeps),
        ("bernoulli data", || from_reports(vec![check_bernoulli(12, 10)])),
        ("classical sequences at q=1", || from_reports(vec![check_classical_q1(9)])),
        ("conjecture sweeps", conjectures),
        ("zeta_q consistency", || from_reports(vec![check_zeta(5, 20)])),
        ("determinism", determinism),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({secs:.2}s) {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL {name} ({secs:.2}s) {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
