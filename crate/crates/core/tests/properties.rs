mod common;

use proptest::prelude::*;
use runpad::bitcore::{bit_count, run_count, to_bitstring};
use runpad::records::{enumerate_t, in_t, scan_records, ScanConfig};
use runpad::seqio::{parse_bfile, Registry};
use runpad::transforms::{self, expand_str, Shrunk};
use runpad::{Bitstring, Mode, Nat, TransformSpec};

fn pad(max: usize) -> impl Strategy<Value = String> {
    prop::collection::vec(prop_oneof![Just('0'), Just('1')], 0..=max).prop_map(|v| v.into_iter().collect())
}

fn equal_pads(k: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = (String, String)> {
    k.prop_flat_map(|k| {
        let bits = || {
            prop::collection::vec(prop_oneof![Just('0'), Just('1')], k).prop_map(|v| v.into_iter().collect())
        };
        (bits(), bits())
    })
}

proptest! {
    #[test]
    fn transforms_agree_with_string_oracle(n in 1u64..1 << 24, d0 in pad(3), d1 in pad(3), append: bool) {
        let mode = if append { Mode::Append } else { Mode::Prepend };
        let spec = TransformSpec::parse(&d0, &d1, mode).unwrap();
        let raw = expand_str(&to_bitstring(&n).unwrap().into_inner(), &spec).unwrap();
        let want = common::expand(n, &d0, &d1, append);
        prop_assert_eq!(raw.to_string(), want.clone());
        let got: Nat = transforms::apply(&Nat::from(n), &spec).unwrap();
        prop_assert_eq!(got, Nat::from(common::value(&want)));
    }

    #[test]
    fn length_predictors_hold(n in 1u64..1 << 40, (d0, d1) in equal_pads(1..=4)) {
        let a = TransformSpec::append(&d0, &d1).unwrap();
        let p = a.with_mode(Mode::Prepend);
        let fv: Nat = transforms::f(&Nat::from(n), &a).unwrap();
        let gv: Nat = transforms::g(&Nat::from(n), &p).unwrap();
        prop_assert_eq!(bit_count(&fv).unwrap(), transforms::predict_len_append(&n, &a).unwrap());
        prop_assert_eq!(bit_count(&gv).unwrap(), transforms::predict_len_prepend(&n, &p).unwrap());
    }

    #[test]
    fn shrink_inverts_f01_on_wide_values(n in any::<u64>().prop_filter("n >= 1", |n| *n >= 1)) {
        let spec = TransformSpec::append("0", "1").unwrap();
        let big = Nat::from(n);
        let fv: Nat = transforms::f(&big, &spec).unwrap();
        prop_assert_eq!(run_count(&fv).unwrap(), run_count(&n).unwrap());
        prop_assert_eq!(transforms::shrink_runs(&fv).unwrap(), Shrunk::Value(big));
    }

    #[test]
    fn eq3_holds_for_random_pads(n in 1u64..1 << 30, (d0, d1) in equal_pads(1..=3)) {
        let d0: Bitstring = d0.parse().unwrap();
        let d1: Bitstring = d1.parse().unwrap();
        prop_assert!(transforms::eq3_identity_check(&Nat::from(n), &d0, &d1).unwrap());
    }

    #[test]
    fn record_entries_are_monotone(limit in 1u64..3000, d0 in pad(2), d1 in pad(2), chunk in 1usize..300) {
        let spec = TransformSpec::append(&d0, &d1).unwrap();
        let recs = scan_records::<Nat>(&ScanConfig::new(spec, limit).with_chunk(chunk)).unwrap();
        prop_assert_eq!(recs[0].index, 1);
        for w in recs.windows(2) {
            prop_assert!(w[0].index < w[1].index);
            prop_assert!(w[0].value < w[1].value);
            prop_assert!(w[0].value_bits <= w[1].value_bits);
        }
        let want = common::records(limit, &d0, &d1, true);
        let got: Vec<(u64, u128)> = recs.iter().map(|e| (e.index, e.value.to_string().parse().unwrap())).collect();
        prop_assert_eq!(got, want);
    }
}

#[test]
fn enumerated_members_are_in_t() {
    for v in enumerate_t::<u64>(500).unwrap() {
        assert!(in_t(&v).unwrap(), "{v}");
    }
}

#[test]
fn every_key_round_trips_through_text() {
    let reg = Registry::standard();
    for desc in reg.iter() {
        let file = reg.emit::<Nat>(&desc.key, 100).unwrap();
        assert_eq!(file.len(), 100);
        let text = file.to_text();
        assert!(text
            .lines()
            .all(|l| l.split(' ').count() == 2 && !l.ends_with(' ')));
        let back = parse_bfile::<Nat, _>(text.as_bytes()).unwrap();
        assert_eq!(back, file, "{}", desc.key);
    }
}

#[test]
fn registry_terms_match_direct_computation() {
    let reg = Registry::standard();
    let terms = |key: &str| -> Vec<u128> { reg.emit::<u128>(key, 20).unwrap().values };
    let direct = |d0: &str, d1: &str, append: bool| -> Vec<u128> {
        (1..=20)
            .map(|n| common::value(&common::expand(n, d0, d1, append)))
            .collect()
    };
    assert_eq!(terms("append-values-01"), direct("0", "1", true));
    assert_eq!(terms("prepend-values-01"), direct("0", "1", false));
    assert_eq!(terms("prepend-values-10"), direct("1", "0", false));

    let recs = common::records(1 << 16, "0", "1", true);
    assert!(recs.len() >= 20);
    let idx: Vec<u128> = recs.iter().take(20).map(|r| r.0 as u128).collect();
    let vals: Vec<u128> = recs.iter().take(20).map(|r| r.1).collect();
    assert_eq!(terms("record-indices-01"), idx);
    assert_eq!(terms("append-record-values-01"), vals);
    let prec: Vec<u128> = common::records(1 << 16, "0", "1", false)
        .iter()
        .take(20)
        .map(|r| r.1)
        .collect();
    assert_eq!(terms("prepend-record-values-01"), prec);

    // drop one digit from each run, read what is left (empty reads as 0)
    let shrink: Vec<u128> = (1..=20u64)
        .map(|n| {
            let s: String = common::runs_of(n).iter().map(|r| &r[1..]).collect();
            if s.is_empty() {
                0
            } else {
                common::value(&s)
            }
        })
        .collect();
    assert_eq!(terms("shrink-runs"), shrink);
}

#[test]
fn worked_example_in_every_width() {
    let spec = TransformSpec::append("0", "1").unwrap();
    assert_eq!(transforms::f(&89u32, &spec).unwrap(), 3299);
    assert_eq!(transforms::f(&89u64, &spec).unwrap(), 3299);
    assert_eq!(transforms::f(&89u128, &spec).unwrap(), 3299);
    assert_eq!(
        transforms::f(&Nat::from(89u8), &spec).unwrap(),
        Nat::from(3299u32)
    );
}
