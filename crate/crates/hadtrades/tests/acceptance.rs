//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`). All verdicts are exact; the
//! only tolerances are wall-clock ceilings.

use hadtrades::constructions::{
    example_paley8, example_paley8_shaded, fourier, paley_i, petrescu7, petrescu_trade, sylvester,
    weave_w64, weave_w64_shaded_block,
};
use hadtrades::cyclotomic::RootExp;
use hadtrades::matrix::{MatrixKind, UnitMatrix};
use hadtrades::search::{
    fourier_divisor_witness, max_rank_one_area, min_support_column_span, min_trade_search_real,
    petrescu_scalar_sweep,
};
use hadtrades::trades::{
    enumerate_rank_one_blocks, is_rank_one, is_rectangular_trade, is_trade, symmetric_difference,
    trade_profile, RectBlock, Trade,
};
use std::collections::BTreeSet;
use std::time::Instant;

type Cell = (usize, usize);

fn verdict(criterion: u32, ok: bool, detail: &str) -> bool {
    println!(
        "criterion {criterion}: {} - {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    ok
}

fn minus_one() -> RootExp {
    RootExp::minus_one(2).unwrap()
}

fn shaded_trade() -> Trade {
    Trade::with_scalar(
        8,
        example_paley8_shaded().into_iter().collect(),
        minus_one(),
    )
    .unwrap()
}

#[test]
fn criterion_01_constructors_verify() {
    let start = Instant::now();
    let mut checked = 0usize;
    for k in 0..=5 {
        assert_eq!(sylvester(k).unwrap().kind(), MatrixKind::VerifiedHadamard);
        checked += 1;
    }
    for n in 1..=12 {
        assert_eq!(fourier(n).unwrap().kind(), MatrixKind::VerifiedHadamard);
        checked += 1;
    }
    for q in [3, 7, 11] {
        assert_eq!(paley_i(q).unwrap().kind(), MatrixKind::VerifiedHadamard);
        checked += 1;
    }
    assert_eq!(example_paley8().kind(), MatrixKind::VerifiedHadamard);
    assert_eq!(petrescu7().kind(), MatrixKind::VerifiedHadamard);
    assert_eq!(weave_w64().kind(), MatrixKind::VerifiedWeighing(4));
    checked += 3;
    let elapsed = start.elapsed();
    let ok = elapsed.as_secs_f64() < 5.0;
    assert!(
        verdict(
            1,
            ok,
            &format!("{checked} constructors verified exactly in {elapsed:?} (< 5 s)")
        ),
        "constructor verification exceeded the time budget"
    );
}

#[test]
fn criterion_02_example1_reproduction() {
    let h = example_paley8();
    let trade = shaded_trade();
    let is = is_trade(&h, &trade).unwrap();
    let profile = trade_profile(&trade);
    // The printed decomposition, 0-based: rows {3,4} x cols {1,2,4,5} and
    // rows {1,3,4,6} x cols {1,2} in the paper's 1-based terms.
    let two_by_four = RectBlock::new(vec![2, 3], vec![0, 1, 3, 4], minus_one()).unwrap();
    let four_by_two = RectBlock::new(vec![0, 2, 3, 5], vec![0, 1], minus_one()).unwrap();
    let both_rect = is_rectangular_trade(&h, &two_by_four).unwrap()
        && is_rectangular_trade(&h, &four_by_two).unwrap();
    let sd = symmetric_difference(
        &two_by_four.to_trade(8).unwrap(),
        &four_by_two.to_trade(8).unwrap(),
    )
    .unwrap();
    let shaded: BTreeSet<Cell> = example_paley8_shaded().into_iter().collect();
    let ok = is && profile.d == Some(2) && profile.e == Some(2) && both_rect && sd.cells == shaded;
    assert!(
        verdict(
            2,
            ok,
            &format!(
                "shaded set is a trade (d={:?}, e={:?}); symmetric difference of the 2x4 and 4x2 \
                 blocks equals the shaded set: {}",
                profile.d,
                profile.e,
                sd.cells == shaded
            )
        ),
        "example 1 reproduction failed"
    );
}

#[test]
fn criterion_03_example2_reproduction() {
    let start = Instant::now();
    let h = petrescu7();
    let orders = [2usize, 3, 4, 6, 12];
    let mut verified = 0usize;
    let mut total = 0usize;
    for &q in &orders {
        for j in 1..q {
            if gcd(j, q) != 1 {
                continue;
            }
            total += 1;
            let c = RootExp::new(j as i64, q).unwrap();
            let t = petrescu_trade(&c).unwrap();
            if is_trade(&h, &t).unwrap() {
                verified += 1;
            }
        }
    }
    let sweep = petrescu_scalar_sweep(&orders).unwrap();
    let elapsed = start.elapsed();
    let ok = verified == total
        && total == 11
        && sweep.certificate == "CERT sweep-verified 11"
        && elapsed.as_secs_f64() < 2.0;
    assert!(
        verdict(
            3,
            ok,
            &format!(
                "shaded set switches for all {verified}/{total} primitive parameters over \
                 q in {{2,3,4,6,12}} in {elapsed:?} (< 2 s); sweep: {}",
                sweep.certificate
            )
        ),
        "example 2 reproduction failed"
    );
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn criterion_04_minimal_trade_oracle() {
    let start = Instant::now();
    let h4 = sylvester(2).unwrap();
    let h8 = sylvester(3).unwrap();
    let p8 = example_paley8();

    let below4 = min_trade_search_real(&h4, 3).unwrap();
    let below8_h8 = min_trade_search_real(&h8, 7).unwrap();
    let below8_p8 = min_trade_search_real(&p8, 7).unwrap();
    let mut ok = below4.certificate == "CERT none-below 4"
        && below8_h8.certificate == "CERT none-below 8"
        && below8_p8.certificate == "CERT none-below 8";

    let mut profile_summary = String::new();
    for (host, n, budget) in [(&h4, 4usize, 4usize), (&h8, 8, 8), (&p8, 8, 8)] {
        let report = min_trade_search_real(host, budget).unwrap();
        ok &= report.certificate == format!("CERT min-size {n}");
        let trades = report.trade_witnesses();
        ok &= !trades.is_empty();
        for t in &trades {
            ok &= t.size() == n;
            ok &= is_trade(host, t).unwrap();
            let p = trade_profile(t);
            let (d, e) = (p.d, p.e);
            let uniform_ok = match (d, e) {
                (Some(d), Some(e)) => {
                    n % d == 0 && n % e == 0 && (d % 2 == 0 || d == 1) && (e % 2 == 0 || e == 1)
                }
                _ => false,
            };
            ok &= uniform_ok;
        }
        profile_summary.push_str(&format!("{} witnesses at n={n}; ", trades.len()));
    }
    let elapsed = start.elapsed();
    ok &= elapsed.as_secs_f64() < 600.0;
    assert!(
        verdict(
            4,
            ok,
            &format!(
                "none-below certificates at budgets n-1; budget-n searches: {profile_summary}\
                 all witnesses re-verify with uniform d | n, e | n, each even or 1; {elapsed:?} \
                 (< 10 min)"
            )
        ),
        "minimal-trade oracle failed"
    );
}

#[test]
fn criterion_05_rank_one_iff_rectangular() {
    let hosts: Vec<(&str, UnitMatrix)> = vec![
        ("sylvester 4", sylvester(2).unwrap()),
        ("fourier 4", fourier(4).unwrap()),
        ("sylvester 8", sylvester(3).unwrap()),
        ("example paley 8", example_paley8()),
    ];
    let mut ok = true;
    let mut pairs_checked = 0usize;
    for (_, h) in &hosts {
        let n = h.order();
        for a in 1..=n {
            if n % a != 0 {
                continue;
            }
            let b = n / a;
            // Exhaustive double enumeration of both sides.
            let rows: Vec<usize> = (0..n).collect();
            let mut rank_one_set = BTreeSet::new();
            let mut rectangular_set = BTreeSet::new();
            for a_set in subsets(&rows, a) {
                for b_set in subsets(&rows, b) {
                    pairs_checked += 1;
                    let block = RectBlock::new(a_set.clone(), b_set.clone(), minus_one()).unwrap();
                    if is_rank_one(h, &a_set, &b_set).unwrap() {
                        rank_one_set.insert((a_set.clone(), b_set.clone()));
                    }
                    if is_rectangular_trade(h, &block).unwrap() {
                        rectangular_set.insert((a_set.clone(), b_set.clone()));
                    }
                }
            }
            ok &= rank_one_set == rectangular_set;
            // The dedicated enumeration agrees with the direct scan.
            let enumerated: BTreeSet<(Vec<usize>, Vec<usize>)> =
                enumerate_rank_one_blocks(h, a, b)
                    .unwrap()
                    .into_iter()
                    .map(|blk| (blk.rows().to_vec(), blk.cols().to_vec()))
                    .collect();
            ok &= enumerated == rank_one_set;
        }
    }
    assert!(
        verdict(
            5,
            ok,
            &format!(
                "rank-one a x b blocks coincide with the restricted-orthogonality trades over \
                 every factorisation at n = 4 and n = 8 ({pairs_checked} block candidates, \
                 4 hosts, both directions)"
            )
        ),
        "rank-one / rectangular equivalence failed"
    );
}

fn subsets(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if pool.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    let head = pool[0];
    for mut rest in subsets(&pool[1..], k - 1) {
        rest.insert(0, head);
        out.push(rest);
    }
    out.extend(subsets(&pool[1..], k));
    out
}

#[test]
fn criterion_06_column_span_support_bounds() {
    let mut floor_ok = true;
    let mut checked = 0usize;
    for n in [4usize, 5, 6, 7] {
        let f = fourier(n).unwrap();
        let cols: Vec<usize> = (0..n).collect();
        for b in [2usize, 3] {
            for set in subsets(&cols, b) {
                let r = min_support_column_span(&f, &set).unwrap();
                floor_ok &= r.min_support >= n.div_ceil(b);
                checked += 1;
            }
        }
    }

    let mut tight_ok = true;
    for n in [4usize, 5, 6, 7] {
        for t in 1..=n {
            if n % t != 0 {
                continue;
            }
            let w = fourier_divisor_witness(n, t).unwrap();
            tight_ok &= w.tight && w.support.len() == n / t;
        }
    }

    // Stated expectation for the prime hosts: the minimum equals n - b.
    let mut prime_expected_ok = true;
    let mut prime_detail = String::new();
    for n in [5usize, 7] {
        let f = fourier(n).unwrap();
        for b in [2usize, 3] {
            let cols: Vec<usize> = (0..b).collect();
            let got = min_support_column_span(&f, &cols).unwrap().min_support;
            let stated = n - b;
            if got != stated {
                prime_expected_ok = false;
            }
            prime_detail.push_str(&format!("n={n},b={b}: stated {stated}, measured {got}; "));
        }
    }

    let ok = floor_ok && tight_ok && prime_expected_ok;
    assert!(
        verdict(
            6,
            ok,
            &format!(
                "floor bound holds for all {checked} column pairs/triples: {floor_ok}; divisor \
                 witnesses tight for every t | n: {tight_ok}; prime cases return n - b: \
                 {prime_expected_ok} ({prime_detail}every square submatrix of a prime-order \
                 Fourier matrix is invertible, so the attainable minimum is n - b + 1)"
            )
        ),
        "the stated prime-case equality n - b is not attainable; the exact enumeration \
         returns n - b + 1"
    );
}

#[test]
fn criterion_07_rank_one_area_bound() {
    let mut ok = true;
    let mut detail = String::new();
    let mut hosts: Vec<(String, UnitMatrix)> = vec![
        ("sylvester 8".into(), sylvester(3).unwrap()),
        ("example paley 8".into(), example_paley8()),
    ];
    for n in 1..=8 {
        hosts.push((format!("fourier {n}"), fourier(n).unwrap()));
    }
    for (name, h) in &hosts {
        let n = h.order();
        let report = max_rank_one_area(h).unwrap();
        let hit = report.certificate == format!("CERT max-area {n}");
        ok &= hit;
        detail.push_str(&format!("{name}: {}; ", report.certificate));
    }
    assert!(
        verdict(7, ok, &format!("maximal rank-one area equals the order exactly: {detail}")),
        "rank-one area bound failed"
    );
}

#[test]
fn criterion_08_skew_diagonal_trades() {
    let mut ok = true;
    let mut detail = String::new();
    for q in [3usize, 7, 11] {
        let h = paley_i(q).unwrap();
        let n = h.order();
        // H + H^T = 2I.
        let mut skew = (0..n).all(|i| h.exponent(i, i) == Some(0));
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    skew &= h.exponent(i, j) != h.exponent(j, i);
                }
            }
        }
        // H - 2I re-verifies: negate the diagonal and check.
        let changes: Vec<(usize, usize, Option<usize>)> =
            (0..n).map(|i| (i, i, Some(1))).collect();
        let re_verifies = h.with_entries(&changes).unwrap().check_hadamard().unwrap();
        let diag = hadtrades::trades::diagonal_trade(&h).unwrap();
        let diag_is_trade = is_trade(&h, &diag).unwrap();
        ok &= skew && re_verifies && diag_is_trade;
        detail.push_str(&format!("q={q}: skew={skew}, H-2I hadamard={re_verifies}; "));
    }
    assert!(
        verdict(8, ok, &detail),
        "skew diagonal trades failed"
    );
}

#[test]
fn criterion_09_weighing_trades() {
    let w = weave_w64();
    let (rows, cols) = weave_w64_shaded_block();
    let mut block_cells = BTreeSet::new();
    for &i in &rows {
        for &j in &cols {
            block_cells.insert((i, j));
        }
    }
    let block_trade = Trade::with_scalar(6, block_cells, minus_one()).unwrap();
    let block_ok = block_trade.size() == 4 && is_trade(&w, &block_trade).unwrap();
    let row_cells: BTreeSet<Cell> = (0..6)
        .filter(|&j| w.exponent(0, j).is_some())
        .map(|j| (0, j))
        .collect();
    let row_trade = Trade::with_scalar(6, row_cells, minus_one()).unwrap();
    let row_ok = row_trade.size() == 4 && is_trade(&w, &row_trade).unwrap();
    let ok = block_ok && row_ok;
    assert!(
        verdict(
            9,
            ok,
            &format!(
                "shaded 2x2 negation is a weight-preserving trade of size 4 = weight: {block_ok}; \
                 single-row negation is a trade of size 4: {row_ok}"
            )
        ),
        "weighing trades failed"
    );
}

#[test]
fn criterion_10_symmetric_difference_bound() {
    let h = sylvester(2).unwrap();
    let report = min_trade_search_real(&h, 4).unwrap();
    let trades = report.trade_witnesses();
    let mut pairs = 0usize;
    let mut min_diff = usize::MAX;
    for (i, a) in trades.iter().enumerate() {
        for b in trades.iter().skip(i + 1) {
            let sd = symmetric_difference(a, b).unwrap();
            pairs += 1;
            min_diff = min_diff.min(sd.cells.len());
        }
    }
    let ok = pairs > 0 && min_diff >= 4;
    assert!(
        verdict(
            10,
            ok,
            &format!(
                "{} budget-4 trades at order 4; over all {pairs} distinct pairs the smallest \
                 symmetric difference has size {min_diff} >= 4",
                trades.len()
            )
        ),
        "symmetric-difference bound failed"
    );
}

#[test]
fn criterion_11_dfs_matches_the_unpruned_ball() {
    let h = sylvester(2).unwrap();
    let report = min_trade_search_real(&h, 4).unwrap();
    let dfs_sets: BTreeSet<BTreeSet<Cell>> = report
        .trade_witnesses()
        .iter()
        .map(|t| t.cells().clone())
        .collect();

    // Independent oracle: flip every pattern of 1..=4 of the 16 cells and
    // test the Hadamard property with plain integer dot products.
    let sign = |m: &UnitMatrix, i: usize, j: usize| -> i64 {
        match m.exponent(i, j) {
            Some(0) => 1,
            Some(_) => -1,
            None => 0,
        }
    };
    let cells: Vec<Cell> = (0..4).flat_map(|i| (0..4).map(move |j| (i, j))).collect();
    let mut patterns_tried = 0usize;
    let mut ball_sets: BTreeSet<BTreeSet<Cell>> = BTreeSet::new();
    for size in 1..=4usize {
        for pattern in subsets(&(0..16).collect::<Vec<_>>(), size) {
            patterns_tried += 1;
            let changes: Vec<(usize, usize, Option<usize>)> = pattern
                .iter()
                .map(|&p| {
                    let (i, j) = cells[p];
                    (i, j, Some(1 - h.exponent(i, j).unwrap()))
                })
                .collect();
            let flipped = h.with_entries(&changes).unwrap();
            let mut hadamard = true;
            for i in 0..4 {
                for j in i + 1..4 {
                    let dot: i64 = (0..4)
                        .map(|c| sign(&flipped, i, c) * sign(&flipped, j, c))
                        .sum();
                    if dot != 0 {
                        hadamard = false;
                    }
                }
            }
            if hadamard {
                ball_sets.insert(pattern.iter().map(|&p| cells[p]).collect());
            }
        }
    }
    let ok = dfs_sets == ball_sets && patterns_tried == 2516;
    assert!(
        verdict(
            11,
            ok,
            &format!(
                "pruned depth-first search found {} trades; the unpruned Hamming ball \
                 ({patterns_tried} nonempty patterns of C(16, <=4)) found {}; sets identical: {}",
                dfs_sets.len(),
                ball_sets.len(),
                dfs_sets == ball_sets
            )
        ),
        "DFS soundness cross-check failed"
    );
}
