use abacus_lab::extremal::min_weight_and_family;
use abacus_lab::oracle::families_up_to;
use abacus_lab::{Params, Partition, RunnerMatrix};

#[test]
fn grouped_families_match_direct_search() {
    for (d, e) in [(2, 3), (3, 5), (3, 4)] {
        let pr = Params::new(d, e).unwrap();
        for ((core, rows), (w, members)) in families_up_to(10, pr) {
            let gamma = Partition::new(core).unwrap();
            let matrix = RunnerMatrix::from_rows(pr, rows).unwrap();
            let fam = min_weight_and_family(&gamma, &matrix).unwrap();
            assert_eq!(fam.w, w, "{gamma} with {matrix} at {pr}");
            let mut grouped = members.clone();
            grouped.sort_by(|a, b| b.parts().cmp(a.parts()));
            assert_eq!(fam.members, grouped, "{gamma} with {matrix} at {pr}");
        }
    }
}

#[test]
fn family_json_round_trips() {
    let pr = Params::new(3, 5).unwrap();
    let matrix =
        RunnerMatrix::from_rows(pr, vec![vec![0, 0, 1, 0, 0], vec![0, 0, 0, 0, 1]]).unwrap();
    let fam = min_weight_and_family(&"1,1".parse().unwrap(), &matrix).unwrap();
    let text = serde_json::to_string(&fam).unwrap();
    assert_eq!(
        serde_json::from_str::<abacus_lab::extremal::FamilyResult>(&text).unwrap(),
        fam
    );
}
