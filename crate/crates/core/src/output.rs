//! Deterministic rendering of results as plain text tables, CSV, and JSON.
//!
//! Every renderer returns a complete newline-terminated string and depends
//! only on its input: equal values produce byte-identical output, so the
//! formats can be diffed, piped, and pinned in tests. Rationals are always
//! written in the canonical reduced form of [`rational_str`]; JSON carries
//! numerators and denominators as decimal strings because the values outgrow
//! every fixed-width integer type.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::exactnum::Rational;
use crate::triangle::{ConjectureReport, LowerBoundResult, TriangleEntry};

/// Canonical text form of a rational: reduced `num/den`, or bare `num` when
/// the denominator is one.
pub fn rational_str(r: &Rational) -> String {
    r.to_string()
}

/// A rational in JSON: `{"num": "...", "den": "..."}`, both reduced, the
/// denominator positive.
#[derive(Serialize)]
pub struct RationalJson {
    num: String,
    den: String,
}

impl RationalJson {
    fn of(r: &Rational) -> Self {
        RationalJson { num: r.numer().to_string(), den: r.denom().to_string() }
    }
}

fn to_json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain structs serialize infallibly");
    s.push('\n');
    s
}

/// One line per row: `s=2: 1/3 1/3`.
pub fn triangle_table(rows: &[Vec<TriangleEntry>]) -> String {
    let mut out = String::new();
    for row in rows {
        let values: Vec<String> = row.iter().map(|e| rational_str(&e.value)).collect();
        out.push_str(&format!("s={}: {}\n", row[0].s, values.join(" ")));
    }
    out
}

/// Rectangular CSV with header `s,j1,..,jM`; short rows are padded with
/// empty cells.
pub fn triangle_csv(rows: &[Vec<TriangleEntry>]) -> String {
    let width = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut out = String::from("s");
    for j in 1..=width {
        out.push_str(&format!(",j{j}"));
    }
    out.push('\n');
    for row in rows {
        out.push_str(&row[0].s.to_string());
        for i in 0..width {
            out.push(',');
            if let Some(e) = row.get(i) {
                out.push_str(&rational_str(&e.value));
            }
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct EntryJson {
    s: u32,
    j: u32,
    value: RationalJson,
}

impl EntryJson {
    fn of(e: &TriangleEntry) -> Self {
        EntryJson { s: e.s, j: e.j, value: RationalJson::of(&e.value) }
    }
}

#[derive(Serialize)]
struct TriangleJson {
    max_s: u32,
    entries: Vec<EntryJson>,
}

/// All entries flattened in row order, with the largest row index.
pub fn triangle_json(rows: &[Vec<TriangleEntry>]) -> String {
    let entries: Vec<EntryJson> = rows.iter().flatten().map(EntryJson::of).collect();
    let max_s = rows.last().map_or(0, |r| r[0].s);
    to_json_line(&TriangleJson { max_s, entries })
}

/// Just the value: `865/651`.
pub fn entry_table(e: &TriangleEntry) -> String {
    format!("{}\n", rational_str(&e.value))
}

/// Header `s,j,value` and one data line.
pub fn entry_csv(e: &TriangleEntry) -> String {
    format!("s,j,value\n{},{},{}\n", e.s, e.j, rational_str(&e.value))
}

/// `{"s":..,"j":..,"value":{..}}`.
pub fn entry_json(e: &TriangleEntry) -> String {
    to_json_line(&EntryJson::of(e))
}

/// Exact truncation diagnostics for one entry after `iterations` iterations.
/// `partial + tail` always reassembles `entry.value` exactly.
pub struct Truncation<'a> {
    pub entry: &'a TriangleEntry,
    pub iterations: u32,
    pub partial: Rational,
    pub tail: Rational,
}

/// Three labeled lines: the truncated sum, the closed-form tail, the entry.
pub fn truncation_table(t: &Truncation) -> String {
    format!(
        "partial({n}) {p}\ntail({n}) {t}\nentry {e}\n",
        n = t.iterations,
        p = rational_str(&t.partial),
        t = rational_str(&t.tail),
        e = rational_str(&t.entry.value),
    )
}

/// Header `s,j,iterations,partial,tail,entry` and one data line.
pub fn truncation_csv(t: &Truncation) -> String {
    format!(
        "s,j,iterations,partial,tail,entry\n{},{},{},{},{},{}\n",
        t.entry.s,
        t.entry.j,
        t.iterations,
        rational_str(&t.partial),
        rational_str(&t.tail),
        rational_str(&t.entry.value),
    )
}

#[derive(Serialize)]
struct TruncationJson {
    s: u32,
    j: u32,
    iterations: u32,
    partial: RationalJson,
    tail: RationalJson,
    entry: RationalJson,
}

/// The truncation as one JSON object.
pub fn truncation_json(t: &Truncation) -> String {
    to_json_line(&TruncationJson {
        s: t.entry.s,
        j: t.entry.j,
        iterations: t.iterations,
        partial: RationalJson::of(&t.partial),
        tail: RationalJson::of(&t.tail),
        entry: RationalJson::of(&t.entry.value),
    })
}

/// Cover counts grouped by uniquely covered elements, tagged with the route
/// that produced them (`"formula"` or `"enumeration"`). Both routes must give
/// identical counts, hence identical output.
pub struct CoverCounts<'a> {
    pub s: u32,
    pub j: u32,
    pub source: &'a str,
    pub counts: &'a BTreeMap<u32, BigInt>,
}

impl CoverCounts<'_> {
    fn total(&self) -> BigInt {
        self.counts.values().sum()
    }
}

/// One `k count` line per group, ascending in `k`.
pub fn covers_table(c: &CoverCounts) -> String {
    let mut out = String::new();
    for (k, count) in c.counts {
        out.push_str(&format!("{k} {count}\n"));
    }
    out
}

/// Header `unique,families` and one data line per group.
pub fn covers_csv(c: &CoverCounts) -> String {
    let mut out = String::from("unique,families\n");
    for (k, count) in c.counts {
        out.push_str(&format!("{k},{count}\n"));
    }
    out
}

#[derive(Serialize)]
struct CoverCountsJson {
    s: u32,
    j: u32,
    source: String,
    counts: BTreeMap<u32, String>,
    total: String,
}

/// The counts as one JSON object with a `k -> count` map; counts are decimal
/// strings.
pub fn covers_json(c: &CoverCounts) -> String {
    to_json_line(&CoverCountsJson {
        s: c.s,
        j: c.j,
        source: c.source.to_string(),
        counts: c.counts.iter().map(|(&k, count)| (k, count.to_string())).collect(),
        total: c.total().to_string(),
    })
}

fn join_hits(hits: &[u32]) -> String {
    if hits.is_empty() {
        return "-".to_string();
    }
    hits.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",")
}

/// One line per entry plus two summary lines (the denominators hit exactly,
/// and the positions no Gaussian binomial accounts for).
pub fn conjecture_table(report: &ConjectureReport) -> String {
    let mut out = String::new();
    for e in &report.entries {
        out.push_str(&format!(
            "(s={}, j={}) den={} exact={} divisor={}\n",
            e.s,
            e.j,
            e.denominator,
            join_hits(&e.exact_hits),
            join_hits(&e.divisor_hits),
        ));
    }
    let hit: Vec<String> =
        report.exact_hit_denominators().iter().map(|d| d.to_string()).collect();
    out.push_str(&format!("exact-hit denominators: {}\n", hit.join(", ")));
    let unmatched: Vec<String> = report
        .unmatched_positions()
        .iter()
        .map(|(s, j)| format!("({s},{j})"))
        .collect();
    out.push_str(&format!("unmatched: {}\n", unmatched.join(" ")));
    out
}

/// Header `s,j,denominator,exact_hits,divisor_hits`; hit lists are
/// `;`-joined inside their cells.
pub fn conjecture_csv(report: &ConjectureReport) -> String {
    let mut out = String::from("s,j,denominator,exact_hits,divisor_hits\n");
    let cell = |hits: &[u32]| {
        hits.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(";")
    };
    for e in &report.entries {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            e.s,
            e.j,
            e.denominator,
            cell(&e.exact_hits),
            cell(&e.divisor_hits),
        ));
    }
    out
}

#[derive(Serialize)]
struct ClassificationJson {
    s: u32,
    j: u32,
    denominator: String,
    exact_hits: Vec<u32>,
    divisor_hits: Vec<u32>,
    unmatched: bool,
}

#[derive(Serialize)]
struct ConjectureJson {
    max_s: u32,
    entries: Vec<ClassificationJson>,
}

/// The full report as one JSON object.
pub fn conjecture_json(report: &ConjectureReport) -> String {
    to_json_line(&ConjectureJson {
        max_s: report.max_s,
        entries: report
            .entries
            .iter()
            .map(|e| ClassificationJson {
                s: e.s,
                j: e.j,
                denominator: e.denominator.to_string(),
                exact_hits: e.exact_hits.clone(),
                divisor_hits: e.divisor_hits.clone(),
                unmatched: e.is_unmatched(),
            })
            .collect(),
    })
}

fn comparison_word(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    }
}

fn comparison_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    }
}

/// One line: `s=3 bound=1 row_sum=11/14 bound > row_sum`.
pub fn lower_bound_table(r: &LowerBoundResult) -> String {
    format!(
        "s={} bound={} row_sum={} bound {} row_sum\n",
        r.s,
        rational_str(&r.bound),
        rational_str(&r.row_sum),
        comparison_word(r.comparison),
    )
}

/// Header `s,bound,row_sum,comparison` and one data line; the comparison is
/// `less`/`equal`/`greater`.
pub fn lower_bound_csv(r: &LowerBoundResult) -> String {
    format!(
        "s,bound,row_sum,comparison\n{},{},{},{}\n",
        r.s,
        rational_str(&r.bound),
        rational_str(&r.row_sum),
        comparison_name(r.comparison),
    )
}

#[derive(Serialize)]
struct LowerBoundJson {
    s: u32,
    bound: RationalJson,
    row_sum: RationalJson,
    comparison: String,
}

/// The bound as one JSON object; `comparison` is `less`/`equal`/`greater`.
pub fn lower_bound_json(r: &LowerBoundResult) -> String {
    to_json_line(&LowerBoundJson {
        s: r.s,
        bound: RationalJson::of(&r.bound),
        row_sum: RationalJson::of(&r.row_sum),
        comparison: comparison_name(r.comparison).to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::triangle;

    #[test]
    fn triangle_formats_pinned() {
        let rows = triangle::rows(3);
        assert_eq!(triangle_table(&rows), "s=2: 1/3 1/3\ns=3: 1/7 1/2 1/7\n");
        assert_eq!(triangle_csv(&rows), "s,j1,j2,j3\n2,1/3,1/3,\n3,1/7,1/2,1/7\n");
        assert_eq!(triangle_csv(&triangle::rows(2)), "s,j1,j2\n2,1/3,1/3\n");
        assert_eq!(
            triangle_json(&triangle::rows(2)),
            "{\"max_s\":2,\"entries\":[\
             {\"s\":2,\"j\":1,\"value\":{\"num\":\"1\",\"den\":\"3\"}},\
             {\"s\":2,\"j\":2,\"value\":{\"num\":\"1\",\"den\":\"3\"}}]}\n"
        );
    }

    #[test]
    fn formats_agree_on_values() {
        let rows = triangle::rows(5);
        let flat: Vec<String> =
            rows.iter().flatten().map(|e| rational_str(&e.value)).collect();

        let from_table: Vec<String> = triangle_table(&rows)
            .lines()
            .flat_map(|line| {
                let (_, values) = line.split_once(": ").expect("row prefix");
                values.split(' ').map(str::to_string).collect::<Vec<_>>()
            })
            .collect();
        assert_eq!(from_table, flat);

        let from_csv: Vec<String> = triangle_csv(&rows)
            .lines()
            .skip(1)
            .flat_map(|line| {
                line.split(',').skip(1).filter(|c| !c.is_empty()).map(str::to_string).collect::<Vec<_>>()
            })
            .collect();
        assert_eq!(from_csv, flat);

        let parsed: serde_json::Value =
            serde_json::from_str(&triangle_json(&rows)).expect("valid json");
        let from_json: Vec<String> = parsed["entries"]
            .as_array()
            .expect("entries array")
            .iter()
            .map(|e| {
                let num = e["value"]["num"].as_str().expect("num");
                let den = e["value"]["den"].as_str().expect("den");
                if den == "1" { num.to_string() } else { format!("{num}/{den}") }
            })
            .collect();
        assert_eq!(from_json, flat);
    }

    #[test]
    fn entry_formats_pinned() {
        let e = triangle::entry(5, 3);
        assert_eq!(entry_table(&e), "865/651\n");
        assert_eq!(entry_csv(&e), "s,j,value\n5,3,865/651\n");
        assert_eq!(
            entry_json(&e),
            "{\"s\":5,\"j\":3,\"value\":{\"num\":\"865\",\"den\":\"651\"}}\n"
        );
    }

    #[test]
    fn truncation_formats_pinned() {
        let e = triangle::entry(4, 2);
        let t = Truncation {
            entry: &e,
            iterations: 3,
            partial: triangle::entry_partial(4, 2, 3),
            tail: triangle::entry_tail(4, 2, 3),
        };
        assert_eq!(
            truncation_table(&t),
            "partial(3) 2415/4096\ntail(3) 213/20480\nentry 3/5\n"
        );
        assert_eq!(
            truncation_csv(&t),
            "s,j,iterations,partial,tail,entry\n4,2,3,2415/4096,213/20480,3/5\n"
        );
        assert_eq!(
            truncation_json(&t),
            "{\"s\":4,\"j\":2,\"iterations\":3,\
             \"partial\":{\"num\":\"2415\",\"den\":\"4096\"},\
             \"tail\":{\"num\":\"213\",\"den\":\"20480\"},\
             \"entry\":{\"num\":\"3\",\"den\":\"5\"}}\n"
        );
    }

    #[test]
    fn covers_formats_pinned() {
        let counts = crate::combinatorics::min_cover_counts(4, 3);
        let c = CoverCounts { s: 4, j: 3, source: "formula", counts: &counts };
        assert_eq!(covers_table(&c), "3 16\n4 6\n");
        assert_eq!(covers_csv(&c), "unique,families\n3,16\n4,6\n");
        assert_eq!(
            covers_json(&c),
            "{\"s\":4,\"j\":3,\"source\":\"formula\",\
             \"counts\":{\"3\":\"16\",\"4\":\"6\"},\"total\":\"22\"}\n"
        );
    }

    #[test]
    fn conjecture_formats() {
        let report = triangle::conjecture_report(4);
        let table = conjecture_table(&report);
        assert!(table.contains("(s=4, j=2) den=5 exact=- divisor=1,2,3\n"));
        assert!(table.contains("exact-hit denominators: 3, 7, 15\n"));
        assert!(table.contains("unmatched: (3,2) (4,3)\n"));
        let csv = conjecture_csv(&report);
        assert!(csv.starts_with("s,j,denominator,exact_hits,divisor_hits\n"));
        assert!(csv.contains("4,2,5,,1;2;3\n"));
        assert!(csv.contains("2,1,3,1,1\n"));
        let parsed: serde_json::Value =
            serde_json::from_str(&conjecture_json(&report)).expect("valid json");
        assert_eq!(parsed["max_s"], 4);
        assert_eq!(parsed["entries"][0]["denominator"], "3");
        assert_eq!(parsed["entries"][0]["unmatched"], false);
    }

    #[test]
    fn lower_bound_formats_pinned() {
        let r = triangle::lower_bound(3);
        assert_eq!(lower_bound_table(&r), "s=3 bound=1 row_sum=11/14 bound > row_sum\n");
        assert_eq!(
            lower_bound_json(&r),
            "{\"s\":3,\"bound\":{\"num\":\"1\",\"den\":\"1\"},\
             \"row_sum\":{\"num\":\"11\",\"den\":\"14\"},\"comparison\":\"greater\"}\n"
        );
        let r2 = triangle::lower_bound(2);
        assert_eq!(lower_bound_table(&r2), "s=2 bound=1/2 row_sum=2/3 bound < row_sum\n");
        assert_eq!(lower_bound_csv(&r2), "s,bound,row_sum,comparison\n2,1/2,2/3,less\n");
    }

    #[test]
    fn rational_str_forms() {
        assert_eq!(rational_str(&rat(10, 21)), "10/21");
        assert_eq!(rational_str(&rat(4, 2)), "2");
        assert_eq!(rational_str(&rat(0, 5)), "0");
        assert_eq!(rational_str(&rat(-1, 2)), "-1/2");
    }
}
