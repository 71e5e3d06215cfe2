//! The checks behind `tiltrep verify`.

use crate::closedform::{dimvec_map_f, dn_rank1, dn_rank2, e6_rank3, FamilyId};
use crate::error::Result;
use crate::hom::{end_dim, ext1_dim_hereditary, find_iso, gen_membership, hom_dim};
use crate::linalg::Field;
use crate::rep::Representation;
use crate::series::{build_e6_rank3_series1, build_rank2, build_tilting_dn, build_tilting_e6};
use crate::tilt::{apply, projective_dims};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Functor,
    Hom,
    Gen,
    Rank1,
    Kgroup,
    Duality,
    E6,
}

#[derive(Clone, Debug)]
pub struct CheckRow {
    pub suite: &'static str,
    pub subject: String,
    pub check: &'static str,
    pub computed: String,
    pub expected: String,
    pub pass: bool,
}

impl CheckRow {
    fn new(
        suite: &'static str,
        subject: impl ToString,
        check: &'static str,
        computed: impl ToString,
        expected: impl ToString,
    ) -> Self {
        let (computed, expected) = (computed.to_string(), expected.to_string());
        Self {
            suite,
            subject: subject.to_string(),
            check,
            pass: computed == expected,
            computed,
            expected,
        }
    }

    fn flag(suite: &'static str, subject: impl ToString, check: &'static str, ok: bool) -> Self {
        Self::new(suite, subject, check, ok, true)
    }
}

fn dims_str(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

/// Dimensions of `Hom(T_k, M)` read off the pictures of the rank 2 images:
/// `m+1` at the two sinks, `2m+2 / 2m+1 / 2m` along the chain with drops
/// after positions `n-j` and `n-i`, and `m` at the two sources.
pub fn expected_rank2_dims(n: usize, i: usize, j: usize, m: usize) -> Vec<i64> {
    let m = m as i64;
    let mut v = vec![m + 1, m + 1];
    for k in 3..n {
        let drops = (k > n - j) as i64 + (k > n - i) as i64;
        v.push(2 * m + 2 - drops);
    }
    v.extend([m, m]);
    v
}

/// Dimension vector of a rank 1 module of the given type over `(n-2,2,2)`,
/// in the canonical vertex order.
pub fn lambda_rank1_dims(kind: u8, n: usize, i: usize, m: usize) -> Vec<i64> {
    let m = m as i64;
    let mut v = vec![m];
    v.extend((1..=n - 3).map(|k| if k >= i { m + 1 } else { m }));
    let (a1p, a1pp, ac) = match kind {
        1 => (m, m + 1, m + 1),
        2 => (m + 1, m + 1, m + 1),
        3 => (m, m, m + 1),
        _ => (m + 1, m, m + 1),
    };
    v.extend([a1p, a1pp, ac]);
    v
}

fn functor_checks(max_n: usize, max_m: usize, field: Field, out: &mut Vec<CheckRow>) -> Result<()> {
    for n in 4..=max_n {
        let t = build_tilting_dn(n, field)?;
        for i in 1..n - 2 {
            for j in i + 1..=n - 2 {
                for m in 0..=max_m {
                    let id = FamilyId::DnRank2 { n, i, j, m };
                    let image = apply(&t, &build_rank2(n - 2, i, j, m, field)?)?.representation;
                    let closed = dn_rank2(n, i, j, m, field)?;
                    out.push(CheckRow::new(
                        "functor",
                        id,
                        "dims F(M) = closed form",
                        dims_str(&image.dim_vector()),
                        dims_str(&closed.dim_vector()),
                    ));
                    out.push(CheckRow::flag(
                        "functor",
                        id,
                        "F(M) isomorphic to closed form",
                        find_iso(&image, &closed)?.is_isomorphic(),
                    ));
                }
            }
        }
    }
    let t = build_tilting_e6(field)?;
    for m in 1..=max_m + 1 {
        let id = FamilyId::E6Rank3 { series: 1, m };
        let image = apply(&t, &build_e6_rank3_series1(m, field)?)?.representation;
        let closed = e6_rank3(1, m, field)?;
        out.push(CheckRow::flag(
            "functor",
            id,
            "F(M) isomorphic to closed form",
            find_iso(&image, &closed)?.is_isomorphic(),
        ));
    }
    Ok(())
}

fn hom_checks(max_n: usize, max_m: usize, field: Field, out: &mut Vec<CheckRow>) -> Result<()> {
    for n in 4..=max_n {
        let t = build_tilting_dn(n, field)?;
        for i in 1..n - 2 {
            for j in i + 1..=n - 2 {
                for m in 0..=max_m {
                    let module = build_rank2(n - 2, i, j, m, field)?;
                    let computed = t
                        .summands
                        .iter()
                        .map(|s| hom_dim(s, &module).map(|d| d as i64))
                        .collect::<Result<Vec<_>>>()?;
                    out.push(CheckRow::new(
                        "hom",
                        FamilyId::DnRank2 { n, i, j, m },
                        "dim Hom(T_k, M), k = 1..n+1",
                        dims_str(&computed),
                        dims_str(&expected_rank2_dims(n, i, j, m)),
                    ));
                }
            }
        }
    }
    let t = build_tilting_e6(field)?;
    for m in 0..=max_m + 1 {
        let module = build_e6_rank3_series1(m, field)?;
        let computed = t
            .summands
            .iter()
            .map(|s| hom_dim(s, &module).map(|d| d as i64))
            .collect::<Result<Vec<_>>>()?;
        let m = m as i64;
        out.push(CheckRow::new(
            "hom",
            FamilyId::E6Rank3 {
                series: 1,
                m: m as usize,
            },
            "dim Hom(T_k, M), k = 0..6",
            dims_str(&computed),
            dims_str(&[3 * m + 1, 2 * m, m, 2 * m, m, 2 * m, m]),
        ));
    }
    Ok(())
}

fn gen_checks(max_n: usize, max_m: usize, field: Field, out: &mut Vec<CheckRow>) -> Result<()> {
    let mut push =
        |id: FamilyId, t: &crate::series::TiltingData, module: Representation| -> Result<()> {
            out.push(CheckRow::flag(
                "gen",
                id,
                "M generated by T",
                gen_membership(&t.summands, &module)?,
            ));
            let image = apply(t, &module)?.representation;
            out.push(CheckRow::new("gen", id, "dim End F(M)", end_dim(&image), 1));
            Ok(())
        };
    for n in 4..=max_n {
        let t = build_tilting_dn(n, field)?;
        for i in 1..n - 2 {
            for j in i + 1..=n - 2 {
                for m in 0..=max_m {
                    push(
                        FamilyId::DnRank2 { n, i, j, m },
                        &t,
                        build_rank2(n - 2, i, j, m, field)?,
                    )?;
                }
            }
        }
    }
    let t = build_tilting_e6(field)?;
    for m in 0..=max_m + 1 {
        push(
            FamilyId::E6Rank3 { series: 1, m },
            &t,
            build_e6_rank3_series1(m, field)?,
        )?;
    }
    Ok(())
}

fn exceptional_rows(
    suite: &'static str,
    id: FamilyId,
    rep: &Representation,
    out: &mut Vec<CheckRow>,
) -> Result<()> {
    out.push(CheckRow::new(suite, id, "dim End", end_dim(rep), 1));
    out.push(CheckRow::new(
        suite,
        id,
        "dim Ext^1 self",
        ext1_dim_hereditary(rep, rep)?,
        0,
    ));
    Ok(())
}

fn rank1_checks(max_n: usize, max_m: usize, field: Field, out: &mut Vec<CheckRow>) -> Result<()> {
    for n in 4..=max_n {
        for kind in 1..=4u8 {
            for i in 1..=n - 2 {
                for m in 1..=max_m {
                    let id = FamilyId::DnRank1 { kind, i, m, n };
                    let rep = dn_rank1(kind, i, m, n, field)?;
                    let expected = dimvec_map_f(n, &lambda_rank1_dims(kind, n, i, m))?;
                    out.push(CheckRow::new(
                        "rank1",
                        id,
                        "dims = f(dim M)",
                        dims_str(&rep.dim_vector()),
                        dims_str(&expected),
                    ));
                    exceptional_rows("rank1", id, &rep, out)?;
                }
            }
        }
    }
    Ok(())
}

fn kgroup_checks(max_n: usize, field: Field, out: &mut Vec<CheckRow>) -> Result<()> {
    for n in 4..=max_n {
        let t = build_tilting_dn(n, field)?;
        for (k, s) in t.summands.iter().enumerate() {
            out.push(CheckRow::new(
                "kgroup",
                format!("{}:{}", t.name, t.summand_labels[k]),
                "f(dim T_k) = dim P_k",
                dims_str(&dimvec_map_f(n, &s.dim_vector())?),
                dims_str(&projective_dims(&t.gamma, k)),
            ));
        }
    }
    Ok(())
}

fn family_members(max_n: usize, max_m: usize) -> Vec<FamilyId> {
    let mut ids = Vec::new();
    for n in 4..=max_n {
        for i in 1..n - 2 {
            for j in i + 1..=n - 2 {
                ids.extend((1..=max_m).map(|m| FamilyId::DnRank2 { n, i, j, m }));
            }
        }
        for kind in 1..=4u8 {
            for i in 1..=n - 2 {
                ids.extend((1..=max_m).map(|m| FamilyId::DnRank1 { kind, i, m, n }));
            }
        }
    }
    for series in 1..=2u8 {
        ids.extend((1..=max_m).map(|m| FamilyId::E6Rank3 { series, m }));
    }
    ids
}

fn duality_checks(max_n: usize, max_m: usize, field: Field, out: &mut Vec<CheckRow>) -> Result<()> {
    for id in family_members(max_n, max_m) {
        let rep = id.build(field)?;
        let dual = rep.dualize();
        out.push(CheckRow::new(
            "duality",
            id,
            "dim End of dual",
            end_dim(&dual),
            1,
        ));
        let back = dual.dualize();
        out.push(CheckRow::flag(
            "duality",
            id,
            "dual of dual = original",
            back.maps() == rep.maps() && back.dims() == rep.dims() && back.quiver() == rep.quiver(),
        ));
    }
    Ok(())
}

fn e6_checks(max_m: usize, field: Field, out: &mut Vec<CheckRow>) -> Result<()> {
    for series in 1..=2u8 {
        for m in 0..=max_m + 1 {
            let id = FamilyId::E6Rank3 { series, m };
            let rep = e6_rank3(series, m, field)?;
            let hub = 3 * m + series as usize;
            out.push(CheckRow::new("e6", id, "hub dimension", rep.dims()[0], hub));
            exceptional_rows("e6", id, &rep, out)?;
        }
    }
    Ok(())
}

pub fn run_suite(suite: Suite, max_n: usize, max_m: usize, field: Field) -> Result<Vec<CheckRow>> {
    let mut out = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Functor {
        functor_checks(max_n, max_m, field, &mut out)?;
    }
    if all || suite == Suite::Hom {
        hom_checks(max_n, max_m, field, &mut out)?;
    }
    if all || suite == Suite::Gen {
        gen_checks(max_n, max_m, field, &mut out)?;
    }
    if all || suite == Suite::Rank1 {
        rank1_checks(max_n, max_m, field, &mut out)?;
    }
    if all || suite == Suite::Kgroup {
        kgroup_checks(max_n, field, &mut out)?;
    }
    if all || suite == Suite::Duality {
        duality_checks(max_n, max_m, field, &mut out)?;
    }
    if all || suite == Suite::E6 {
        e6_checks(max_m, field, &mut out)?;
    }
    Ok(out)
}

pub fn render(rows: &[CheckRow]) -> String {
    let w_subject = rows.iter().map(|r| r.subject.len()).max().unwrap_or(0);
    let w_check = rows.iter().map(|r| r.check.len()).max().unwrap_or(0);
    let mut s = String::new();
    for r in rows {
        s.push_str(&format!(
            "{}  {:<8} {:<w_subject$}  {:<w_check$}  computed={} expected={}\n",
            if r.pass { "PASS" } else { "FAIL" },
            r.suite,
            r.subject,
            r.check,
            r.computed,
            r.expected,
        ));
    }
    let failed = rows.iter().filter(|r| !r.pass).count();
    s.push_str(&format!("{} checks, {} failed\n", rows.len(), failed));
    s
}
