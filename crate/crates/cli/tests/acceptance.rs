use std::time::{Duration, Instant};

use abacus_lab::abacus::{partition_of, BetaSet, SwapKind};
use abacus_lab::classes::classify_partition;
use abacus_lab::extremal::{
    a1, a2, core_and_weight, dominance_extreme, greedy_max, min_weight_and_family, minimize,
    replay_runner_wise,
};
use abacus_lab::mullineux::{ama, xu_recursive, Ms};
use abacus_lab::oracle::{
    check_family, check_swaps, default_pairs, enumerate_e_regular, enumerate_partitions,
    families_up_to,
};
use abacus_lab::runner::{runner_matrix_of_partition, RunnerMatrix};
use abacus_lab::{beta_set, rim::j_map, OrderRelation, Params, Partition};
use abacus_lab_cli::dispatch_with_input;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn pr(d: i64, e: i64) -> Params {
    Params::new(d, e).unwrap()
}

fn cli(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["abacus-lab"];
    argv.extend_from_slice(args);
    let out = dispatch_with_input(argv, &mut std::io::empty());
    (out.code, out.stdout.trim_end().to_string())
}

fn expect(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    expect(
        start.elapsed() < limit,
        format!("took {:?}, limit {limit:?}", start.elapsed()),
    )
}

fn example_end_to_end() -> Outcome {
    let start = Instant::now();
    let checks = [
        (vec!["mullineux", "--e", "5", "--prime", "6,4,2"], "5,3,3,1"),
        (
            vec!["core", "--e", "5", "6,4,2"],
            r#"{"core":"1,1","weight":2}"#,
        ),
        (
            vec!["runner-matrix", "--e", "5", "--d", "3", "6,4,2"],
            "[[0,0,1,0,0],[0,0,0,0,1]]",
        ),
    ];
    for (args, want) in checks {
        let (code, out) = cli(&args);
        expect(
            code == 0 && out == want,
            format!("{args:?} gave {code} {out:?}"),
        )?;
    }
    let (code, _) = cli(&["mullineux", "--e", "5", "1,1,1,1,1"]);
    expect(code == 3, format!("non-regular input exited with {code}"))?;
    within(Duration::from_secs(1), start)?;
    Ok("three commands match".into())
}

fn example_family() -> Outcome {
    let start = Instant::now();
    let matrix = RunnerMatrix::from_rows(pr(3, 5), vec![vec![0, 0, 1, 0, 0], vec![0, 0, 0, 0, 1]])
        .map_err(|e| e.to_string())?;
    let fam = min_weight_and_family(&p("1,1"), &matrix).map_err(|e| e.to_string())?;
    let want = vec![p("6,4,2"), p("6,3,2,1"), p("5,4,3"), p("5,3,3,1")];
    expect(fam.w == 2, format!("w = {}", fam.w))?;
    expect(fam.members == want, format!("members {:?}", fam.members))?;
    expect(fam.max_elem == p("6,4,2"), format!("max {}", fam.max_elem))?;
    expect(
        fam.min_elem == Some(p("5,3,3,1")),
        format!("min {:?}", fam.min_elem),
    )?;
    let (code, out) = cli(&[
        "family",
        "--e",
        "5",
        "--d",
        "3",
        "--core",
        "1,1",
        "--matrix",
        "[[0,0,1,0,0],[0,0,0,0,1]]",
    ]);
    expect(code == 0, format!("family exited with {code}"))?;
    let json: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    expect(
        json["max_elem"] == "6,4,2" && json["min_elem"] == "5,3,3,1",
        out.clone(),
    )?;
    within(Duration::from_secs(5), start)?;
    Ok("w = 2, four members, max and min exact".into())
}

fn j_map_example() -> Outcome {
    let start = Instant::now();
    let j = j_map(&p("6,4,2"), 5).map_err(|e| e.to_string())?;
    expect(j == p("4,3"), format!("J = {j}"))?;
    let next = Ms(&beta_set(&p("6,4,2"), 0), 5).map_err(|e| e.to_string())?;
    let (lambda, shift) = partition_of(&next);
    expect(
        lambda == p("4,3"),
        format!("Ms gives {lambda} at shift {shift}"),
    )?;
    let (code, out) = cli(&["j", "--e", "5", "6,4,2"]);
    expect(code == 0 && out == "4,3", format!("j command gave {out:?}"))?;
    within(Duration::from_secs(1), start)?;
    Ok(format!("J = (4,3); Ms set has shift {shift}"))
}

fn ama_matches_xu() -> Outcome {
    let mut count = 0;
    for e in [3, 4, 5, 7] {
        for n in 0..=18 {
            for lambda in enumerate_e_regular(n, e) {
                let x = ama(&lambda, e).map_err(|err| err.to_string())?;
                let y = xu_recursive(&lambda, e).map_err(|err| err.to_string())?;
                expect(x == y, format!("{lambda} at e = {e}: {x} vs {y}"))?;
                let c1 = core_and_weight(&lambda, e).map_err(|err| err.to_string())?;
                let c2 = core_and_weight(&x, e).map_err(|err| err.to_string())?;
                expect(c1 == c2, format!("core of {lambda} at e = {e}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} regular partitions, zero mismatches"))
}

fn balanced_image_sweep() -> Outcome {
    let mut count = 0;
    for pr in default_pairs() {
        let e = pr.e();
        for n in 0..=20 {
            for lambda in enumerate_partitions(n) {
                if !classify_partition(&lambda, pr).balanced {
                    continue;
                }
                let r = runner_matrix_of_partition(&lambda, pr);
                if !r.row_has_zero(1) {
                    continue;
                }
                let image = ama(&lambda, e).map_err(|err| format!("{lambda} at {pr}: {err}"))?;
                expect(
                    classify_partition(&image, pr).shift_balanced,
                    format!("{lambda} at {pr}"),
                )?;
                expect(
                    runner_matrix_of_partition(&image, pr) == r,
                    format!("matrix of {lambda} at {pr}"),
                )?;
                let c1 = core_and_weight(&lambda, e).map_err(|err| err.to_string())?;
                let c2 = core_and_weight(&image, e).map_err(|err| err.to_string())?;
                expect(c1 == c2, format!("core of {lambda} at {pr}"))?;
                let low =
                    minimize(&lambda, pr).map_err(|err| format!("{lambda} at {pr}: {err}"))?;
                expect(
                    low == image,
                    format!("minimize({lambda}) = {low}, image {image} at {pr}"),
                )?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} balanced partitions with a zero in row 1"))
}

fn family_extremes() -> Outcome {
    let mut families = 0;
    for pr in [pr(2, 3), pr(2, 5), pr(3, 5)] {
        for ((core, rows), (_, members)) in families_up_to(16, pr) {
            let gamma = Partition::new(core).map_err(|e| e.to_string())?;
            check_family(pr, &gamma, &rows, &members, None)
                .map_err(|msg| format!("family of {gamma} with {rows:?} at {pr}: {msg}"))?;
            families += 1;
        }
    }
    Ok(format!("{families} families"))
}

fn two_class_max_to_min() -> Outcome {
    let mut checked = 0;
    for e in [3, 5] {
        let pr = pr(2, e);
        for ((core, rows), (_, members)) in families_up_to(16, pr) {
            if !rows[0].contains(&0) {
                continue;
            }
            let max = dominance_extreme(&members, OrderRelation::Greater).ok_or("no maximum")?;
            let min = dominance_extreme(&members, OrderRelation::Less).ok_or("no minimum")?;
            let image = ama(&max, e).map_err(|err| format!("{max} at {pr}: {err}"))?;
            expect(
                image == min,
                format!("core {core:?}, {rows:?} at {pr}: {image} vs {min}"),
            )?;
            checked += 1;
        }
    }
    Ok(format!("{checked} families with a zero in the row"))
}

fn swap_algorithms() -> Outcome {
    let up_down_set = BetaSet::new(5, [18, 17, 15, 13, 11, 10, 8, 7]).map_err(|e| e.to_string())?;
    let (out, log) = a1(&up_down_set, 10, 1, pr(3, 5)).map_err(|e| e.to_string())?;
    expect(
        log.indices(SwapKind::Up) == vec![0, 1, 5],
        "A1 fixture up-moves",
    )?;
    expect(
        log.indices(SwapKind::Down) == vec![2, 12, 13],
        "A1 fixture down-moves",
    )?;
    expect(
        replay_runner_wise(&up_down_set, &log, 1, 5) == out,
        "A1 fixture replay",
    )?;
    let descending_set = BetaSet::new(5, [23, 22, 20, 19, 13, 10]).map_err(|e| e.to_string())?;
    let (out, log) = a2(&descending_set, 20, 1, pr(3, 5)).map_err(|e| e.to_string())?;
    expect(
        log.indices(SwapKind::Up) == vec![0, 1, 6, 10],
        "A2 fixture up-moves",
    )?;
    expect(
        log.indices(SwapKind::Down) == vec![2],
        "A2 fixture down-moves",
    )?;
    expect(
        replay_runner_wise(&descending_set, &log, 1, 5) == out,
        "A2 fixture replay",
    )?;

    let mut least = usize::MAX;
    for pr in default_pairs() {
        let mut count = 0;
        let mut n = 0;
        while count < 10_000 {
            for lambda in enumerate_partitions(n) {
                count += check_swaps(&lambda, pr).map_err(|msg| format!("{lambda}: {msg}"))?;
            }
            n += 1;
        }
        least = least.min(count);
    }
    Ok(format!(
        "fixtures exact; at least {least} instances per pair"
    ))
}

fn greedy_construction() -> Outcome {
    let example = RunnerMatrix::from_rows(pr(3, 5), vec![vec![0, 0, 1, 0, 0], vec![0, 0, 0, 0, 1]])
        .map_err(|e| e.to_string())?;
    let top = greedy_max(&p("1,1"), &example).map_err(|e| e.to_string())?;
    expect(top == p("6,4,2"), format!("fixture gives {top}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let pairs = [pr(2, 3), pr(2, 5), pr(3, 4), pr(3, 5), pr(4, 5)];
    let mut count = 0;
    for _ in 0..2000 {
        let pr = pairs[rng.gen_range(0..pairs.len())];
        let e = pr.e();
        let seeds: Vec<Partition> = enumerate_partitions(rng.gen_range(0..=12)).collect();
        let seed = &seeds[rng.gen_range(0..seeds.len())];
        let gamma = core_and_weight(seed, e).map_err(|err| err.to_string())?.0;
        let rows: Vec<Vec<u64>> = (1..pr.d())
            .map(|_| (0..e).map(|_| rng.gen_range(0..=2)).collect())
            .collect();
        let matrix = RunnerMatrix::from_rows(pr, rows.clone()).map_err(|err| err.to_string())?;
        let out = greedy_max(&gamma, &matrix).map_err(|err| err.to_string())?;
        let tag = format!("core {gamma}, {rows:?} at {pr} gives {out}");
        expect(
            core_and_weight(&out, e).map_err(|err| err.to_string())?.0 == gamma,
            format!("{tag}: core"),
        )?;
        expect(
            runner_matrix_of_partition(&out, pr) == matrix,
            format!("{tag}: matrix"),
        )?;
        expect(
            classify_partition(&out, pr).shift_skewed,
            format!("{tag}: not shift skewed"),
        )?;
        count += 1;
    }
    Ok(format!("fixture exact; {count} random instances"))
}

fn verify_default() -> Outcome {
    let (code, first) = cli(&["verify"]);
    expect(code == 0, format!("verify exited with {code}"))?;
    let (_, second) = cli(&["verify"]);
    expect(first == second, "reports differ between runs")?;
    let lines: Vec<serde_json::Value> = first
        .lines()
        .map(serde_json::from_str)
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    expect(
        lines.iter().all(|l| l["failures"] == 0),
        "a property failed",
    )?;
    Ok(format!(
        "{} properties green, byte-identical reruns",
        lines.len()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("commands on (6,4,2) at e = 5", example_end_to_end),
        ("family of (1,1) at d = 3, e = 5", example_family),
        ("J map and Ms", j_map_example),
        ("abacus algorithm matches Xu recursion", ama_matches_xu),
        ("balanced image is shift balanced", balanced_image_sweep),
        ("family extremes are unique", family_extremes),
        ("d = 2 family max maps to min", two_class_max_to_min),
        ("A1/A2 swap algorithms", swap_algorithms),
        ("greedy construction", greedy_construction),
        ("verify with default config", verify_default),
    ];
    let mut failed = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match &result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.2}s)", k + 1),
            Err(msg) => {
                println!("criterion {:>2} FAIL  {name}: {msg} ({secs:.2}s)", k + 1);
                failed.push(k + 1);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", criteria.len());
    } else {
        println!("acceptance: failing criteria {failed:?}");
        std::process::exit(1);
    }
}
