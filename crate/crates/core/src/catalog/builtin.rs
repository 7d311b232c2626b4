//! Built-in identities.

use super::{CatalogEntry, Provenance};
use crate::numeric::rational::{int, rat};
use crate::numeric::{Poly, Rational};
use crate::series::{
    HarmonicArg, HarmonicFactor, IdentityDef, PochFactor, SeriesDef, SummandTerm, TargetTerm, ZetaConst,
};

fn p(c: &[i64]) -> Poly {
    Poly::from_ints(c)
}

/// `(1)_k^m / (3/2)_k^m`, the shared Pochhammer block.
fn central(z: Rational, m: u32) -> SeriesDef {
    SeriesDef::new(
        z,
        vec![PochFactor::k(int(1)).pow(m)],
        vec![PochFactor::k(rat(3, 2)).pow(m)],
        Vec::new(),
    )
}

fn with_terms(mut s: SeriesDef, terms: Vec<SummandTerm>) -> SeriesDef {
    s.terms = terms;
    s
}

fn h1k() -> HarmonicFactor {
    HarmonicFactor::h_k(1)
}
fn h2k() -> HarmonicFactor {
    HarmonicFactor::h_k(2)
}
fn h1o() -> HarmonicFactor {
    HarmonicFactor::h_odd(1)
}
fn h2o() -> HarmonicFactor {
    HarmonicFactor::h_odd(2)
}

fn poly_term(c: &[i64]) -> SummandTerm {
    SummandTerm::poly(p(c))
}

/// `c · P(k) · H`
fn poly_h(c: i64, poly: &[i64], h: HarmonicFactor) -> SummandTerm {
    SummandTerm::poly(p(poly).scale(&int(c))).with(h)
}

/// `num / den(k)`
fn frac(num: Rational, den: Poly) -> SummandTerm {
    SummandTerm::rational(Poly::constant(num), den)
}

const P_1024: [i64; 3] = [77, 250, 205];
const P_4: [i64; 3] = [5, 14, 10];

/// `(19 + 30k) / ((1+k)(1+2k))`
fn r_term(c: Rational) -> SummandTerm {
    SummandTerm::rational(p(&[19, 30]).scale(&c), p(&[1, 3, 2]))
}

fn one_plus_k_pow(e: u32) -> Poly {
    p(&[1, 1]).pow(e)
}

fn one_plus_2k_pow(e: u32) -> Poly {
    p(&[1, 2]).pow(e)
}

fn z3(c: Rational) -> TargetTerm {
    TargetTerm::new(ZetaConst::Zeta3, c)
}
fn z4(c: Rational) -> TargetTerm {
    TargetTerm::new(ZetaConst::Zeta4, c)
}
fn z5(c: Rational) -> TargetTerm {
    TargetTerm::new(ZetaConst::Zeta5, c)
}

fn entry(id: &str, provenance: Provenance, series: SeriesDef, target: Vec<TargetTerm>, expected: Option<usize>) -> CatalogEntry {
    let label = format!(
        "{}: {}",
        provenance.label_prefix(),
        crate::series::TargetDisplay(&target)
    );
    CatalogEntry {
        def: IdentityDef {
            id: id.to_string(),
            series,
            target,
            label,
        },
        provenance,
        expected_terms_100d: expected,
    }
}

/// All identities shipped with the crate, sorted by id.
pub fn builtin_catalog() -> Vec<CatalogEntry> {
    use Provenance::*;
    let a = || central(rat(-1, 1024), 5);
    let c = || central(rat(-1, 4), 5);
    let w = || central(rat(1, 16), 2);

    let mut v = vec![
        // Fast ζ(3) series.
        entry("az-zeta3", Classical, with_terms(a(), vec![poly_term(&P_1024)]), vec![z3(int(64))], Some(39)),
        entry("guillera-zeta3", Classical, with_terms(c(), vec![poly_term(&P_4)]), vec![z3(rat(7, 2))], Some(185)),
        entry("cz-zeta3", Classical, with_terms(w(), vec![r_term(int(1))]), vec![z3(int(16))], Some(92)),
        entry(
            "goldbach",
            Classical,
            SeriesDef::new(
                int(1),
                vec![],
                vec![],
                vec![
                    frac(int(1), one_plus_k_pow(3)),
                    frac(int(1), one_plus_k_pow(3)).with(HarmonicFactor::new(1, HarmonicArg::K, int(1))),
                ],
            )
            .polynomial(),
            vec![z4(rat(5, 4))],
            None,
        ),
        entry(
            "borwein-bradley-zeta5",
            Classical,
            with_terms(
                central(rat(-1, 4), 1),
                vec![
                    frac(int(4), one_plus_k_pow(4)),
                    frac(int(-5), one_plus_k_pow(2)).with(h2k()),
                ],
            ),
            vec![z5(int(4))],
            Some(176),
        ),
        // ζ(4), ζ(5) from the z = -1/1024 and z = -1/4 families.
        entry(
            "sun-zeta4-a",
            Theorem,
            with_terms(
                a(),
                vec![poly_h(1, &P_1024, h1o()), poly_h(-1, &P_1024, h1k()), poly_term(&[-25, -41])],
            ),
            vec![z4(int(48))],
            Some(39),
        ),
        entry(
            "sun-zeta5-b",
            Theorem,
            with_terms(
                a(),
                vec![poly_h(4, &P_1024, h2o()), poly_h(-12, &P_1024, h2k()), poly_term(&[-43])],
            ),
            vec![z5(int(256))],
            Some(39),
        ),
        entry(
            "sun-zeta4-c",
            Theorem,
            with_terms(c(), vec![poly_h(2, &P_4, h1o()), poly_h(-1, &P_4, h1k()), poly_term(&[-2, -3])]),
            vec![z4(rat(45, 8))],
            Some(185),
        ),
        entry(
            "sun-zeta5-d",
            Theorem,
            with_terms(c(), vec![poly_h(4, &P_4, h2o()), poly_h(-3, &P_4, h2k()), poly_term(&[-2])]),
            vec![z5(rat(31, 2))],
            Some(185),
        ),
        // ζ(4), ζ(5) from the z = 1/16 family.
        entry(
            "wei-zeta4-e",
            Theorem,
            with_terms(w(), vec![r_term(int(1)).with(h1o()), frac(rat(13, 2), one_plus_k_pow(2))]),
            vec![z4(int(24))],
            Some(92),
        ),
        entry(
            "wei-zeta4-f",
            Theorem,
            with_terms(
                w(),
                vec![
                    r_term(int(15)).with(h1o()),
                    r_term(int(-26)).with(h1k()),
                    frac(int(104), one_plus_2k_pow(2)),
                ],
            ),
            vec![z4(int(360))],
            Some(92),
        ),
        entry(
            "wei-zeta5-g",
            Theorem,
            with_terms(w(), vec![r_term(int(1)).with(h2k()), frac(rat(-17, 2), one_plus_k_pow(3))]),
            vec![z5(int(-8))],
            Some(92),
        ),
        entry(
            "wei-zeta5-h",
            Theorem,
            with_terms(
                w(),
                vec![
                    r_term(int(1)).with(h2o()),
                    r_term(int(-2)).with(h2k()),
                    frac(rat(-9, 4), one_plus_k_pow(3)),
                ],
            ),
            vec![z5(int(16))],
            Some(92),
        ),
        entry(
            "combined-616",
            Combined,
            with_terms(w(), vec![r_term(int(34)).with(h2o()), r_term(int(-77)).with(h2k())]),
            vec![z5(int(616))],
            Some(92),
        ),
        // Limits of the differentiated transformations at the central point.
        entry(
            "intermediate-wei-cc",
            Intermediate,
            with_terms(
                a(),
                vec![
                    poly_h(1, &P_1024, h1o()),
                    poly_h(-1, &P_1024, h1k()),
                    SummandTerm::poly(p(&P_1024).scale(&rat(-1, 2))),
                    poly_term(&[-25, -41]),
                ],
            ),
            vec![z4(int(48)), z3(int(-32))],
            None,
        ),
        entry(
            "intermediate-wei-ff",
            Intermediate,
            with_terms(
                a(),
                vec![
                    poly_h(4, &P_1024, h2o()),
                    poly_h(-12, &P_1024, h2k()),
                    SummandTerm::poly(p(&P_1024).scale(&int(-4))),
                    poly_term(&[-43]),
                ],
            ),
            vec![z5(int(256)), z3(int(-256))],
            None,
        ),
        entry(
            "intermediate-wei-jj",
            Intermediate,
            with_terms(
                c(),
                vec![
                    poly_h(2, &P_4, h1o()),
                    poly_h(-1, &P_4, h1k()),
                    SummandTerm::poly(p(&P_4).scale(&int(-1))),
                    poly_term(&[-2, -3]),
                ],
            ),
            vec![z4(rat(45, 8)), z3(rat(-7, 2))],
            None,
        ),
        entry(
            "intermediate-wei-mm",
            Intermediate,
            with_terms(
                c(),
                vec![
                    poly_h(4, &P_4, h2o()),
                    poly_h(-3, &P_4, h2k()),
                    SummandTerm::poly(p(&P_4).scale(&int(-4))),
                    poly_term(&[-2]),
                ],
            ),
            vec![z5(rat(31, 2)), z3(int(-14))],
            None,
        ),
        entry(
            "intermediate-wei-thb",
            Intermediate,
            with_terms(
                w(),
                vec![
                    r_term(int(1)).with(h1o()),
                    r_term(int(-1)),
                    frac(rat(13, 2), one_plus_k_pow(2)),
                ],
            ),
            vec![z4(int(24)), z3(int(-16))],
            None,
        ),
        entry(
            "intermediate-wei-thd",
            Intermediate,
            with_terms(
                w(),
                vec![
                    r_term(int(1)).with(h1o()),
                    r_term(int(-2)).with(h1k()),
                    r_term(int(-1)),
                    frac(int(8), one_plus_2k_pow(2)),
                    frac(int(-1), one_plus_k_pow(2)),
                ],
            ),
            vec![z4(int(24)), z3(int(-16))],
            None,
        ),
        entry(
            "intermediate-wei-thf",
            Intermediate,
            with_terms(
                w(),
                vec![
                    r_term(int(2)).with(h2k()),
                    r_term(int(1)),
                    frac(int(-17), one_plus_k_pow(3)),
                ],
            ),
            vec![z3(int(16)), z5(int(-16))],
            None,
        ),
        entry(
            "intermediate-wei-thp",
            Intermediate,
            with_terms(
                w(),
                vec![
                    r_term(int(1)).with(h2o()),
                    r_term(int(-2)).with(h2k()),
                    r_term(int(-1)),
                    frac(rat(-9, 4), one_plus_k_pow(3)),
                ],
            ),
            vec![z5(int(16)), z3(int(-16))],
            None,
        ),
    ];
    v.sort_by(|a, b| a.def.id.cmp(&b.def.id));
    v
}
