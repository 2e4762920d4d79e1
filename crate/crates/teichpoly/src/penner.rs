//! Polynomial invariants of generic Penner-construction mapping classes:
//! words in positive a-twists and negative b-twists acting through
//! unipotent block matrices over the group ring.

use crate::error::{Error, Result};
use crate::groupring::GroupPoly;
use crate::polymat::{char_det, PolyMatrix};
use rug::Integer;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TwistKind {
    A,
    B,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PennerStep {
    pub kind: TwistKind,
    pub multiplicities: Vec<i64>,
}

/// A curve system and twist word. `intersection` is the m x n matrix whose
/// (i, j) entry records the intersections of the i-th a-curve with the
/// j-th b-curve, graded by the group element carried by each intersection
/// point; `r` is the total geometric intersection count. Genericity of the
/// curve system is an attestation supplied by the caller, not something
/// the toolkit can verify from this data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PennerSpec {
    m: usize,
    n: usize,
    intersection: PolyMatrix,
    word: Vec<PennerStep>,
    r: i64,
    pub generic: bool,
}

impl PennerSpec {
    /// Validates shapes, nonnegativity, the intersection-count total and
    /// cyclic alternation, and rotates the word to the canonical a-first
    /// order (a cyclic rotation conjugates the product, which leaves every
    /// characteristic polynomial downstream unchanged).
    pub fn new(
        m: usize,
        n: usize,
        intersection: PolyMatrix,
        mut word: Vec<PennerStep>,
        r: i64,
        generic: bool,
    ) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::ShapeMismatch("need at least one curve of each kind".into()));
        }
        if intersection.rows() != m || intersection.cols() != n {
            return Err(Error::ShapeMismatch(format!(
                "intersection matrix is {}x{}, expected {m}x{n}",
                intersection.rows(),
                intersection.cols()
            )));
        }
        let mut total = Integer::new();
        for e in intersection.entries() {
            for c in e.terms().values() {
                if *c < 0 {
                    return Err(Error::NegativeIntersection);
                }
                total += c;
            }
        }
        if total != r {
            return Err(Error::ShapeMismatch(format!(
                "r = {r} does not match the intersection total {total}"
            )));
        }
        if word.is_empty() || word.len() % 2 != 0 {
            return Err(Error::WordNotAlternating);
        }
        for (i, step) in word.iter().enumerate() {
            let expect = match step.kind {
                TwistKind::A => m,
                TwistKind::B => n,
            };
            if step.multiplicities.len() != expect {
                return Err(Error::DimensionMismatch {
                    expected: expect,
                    got: step.multiplicities.len(),
                });
            }
            if step.multiplicities.iter().any(|v| *v < 0) {
                return Err(Error::NegativeMultiplicity);
            }
            if word[(i + 1) % word.len()].kind == step.kind {
                return Err(Error::WordNotAlternating);
            }
        }
        if word[0].kind == TwistKind::B {
            word.rotate_left(1);
        }
        Ok(PennerSpec {
            m,
            n,
            intersection,
            word,
            r,
            generic,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn intersection(&self) -> &PolyMatrix {
        &self.intersection
    }

    pub fn word(&self) -> &[PennerStep] {
        &self.word
    }

    fn vars(&self) -> Vec<String> {
        self.intersection.vars().to_vec()
    }
}

fn scale_rows(m: &PolyMatrix, weights: &[i64]) -> PolyMatrix {
    let rows: Vec<Vec<GroupPoly>> = (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| m.entry(i, j).scale(&Integer::from(weights[i])))
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(rows).expect("shape preserved")
}

fn assemble_blocks(
    tl: &PolyMatrix,
    tr: &PolyMatrix,
    bl: &PolyMatrix,
    br: &PolyMatrix,
) -> PolyMatrix {
    let mut rows: Vec<Vec<GroupPoly>> = Vec::new();
    for i in 0..tl.rows() {
        let mut row: Vec<GroupPoly> = (0..tl.cols()).map(|j| tl.entry(i, j).clone()).collect();
        row.extend((0..tr.cols()).map(|j| tr.entry(i, j).clone()));
        rows.push(row);
    }
    for i in 0..bl.rows() {
        let mut row: Vec<GroupPoly> = (0..bl.cols()).map(|j| bl.entry(i, j).clone()).collect();
        row.extend((0..br.cols()).map(|j| br.entry(i, j).clone()));
        rows.push(row);
    }
    PolyMatrix::from_rows(rows).expect("blocks are shape-consistent")
}

/// The unipotent block matrix of one twist step: for an a-step with
/// multiplicities v this is [[I, diag(v) M], [0, I]]; for a b-step with
/// multiplicities w it is [[I, 0], [diag(w) M^T(inverted vars), I]].
pub fn twist_blocks(spec: &PennerSpec, step_index: usize) -> Result<PolyMatrix> {
    let step = spec.word.get(step_index).ok_or(Error::IndexOutOfRange {
        index: step_index,
        len: spec.word.len(),
    })?;
    if step.multiplicities.iter().any(|v| *v < 0) {
        return Err(Error::NegativeMultiplicity);
    }
    let vars = spec.vars();
    let im = PolyMatrix::identity(spec.m, vars.clone());
    let in_ = PolyMatrix::identity(spec.n, vars.clone());
    let zero = |r: usize, c: usize| {
        PolyMatrix::from_entries(r, c, vec![GroupPoly::zero(vars.clone()); r * c])
            .expect("shape is consistent")
    };
    Ok(match step.kind {
        TwistKind::A => {
            let tr = scale_rows(&spec.intersection, &step.multiplicities);
            assemble_blocks(&im, &tr, &zero(spec.n, spec.m), &in_)
        }
        TwistKind::B => {
            let mut mt = spec.intersection.transpose();
            for k in 0..vars.len() {
                mt = mt.try_map_entries(|e| e.substitute_inverse(k))?;
            }
            let bl = scale_rows(&mt, &step.multiplicities);
            assemble_blocks(&im, &zero(spec.m, spec.n), &bl, &in_)
        }
    })
}

fn check_every_curve_twisted(spec: &PennerSpec) -> Result<()> {
    let mut a_touched = vec![false; spec.m];
    let mut b_touched = vec![false; spec.n];
    for step in &spec.word {
        let touched = match step.kind {
            TwistKind::A => &mut a_touched,
            TwistKind::B => &mut b_touched,
        };
        for (i, v) in step.multiplicities.iter().enumerate() {
            if *v > 0 {
                touched[i] = true;
            }
        }
    }
    if let Some(i) = a_touched.iter().position(|t| !t) {
        return Err(Error::UntwistedCurve(format!("a{}", i + 1)));
    }
    if let Some(i) = b_touched.iter().position(|t| !t) {
        return Err(Error::UntwistedCurve(format!("b{}", i + 1)));
    }
    Ok(())
}

/// The invariant polynomial of the word: (u-1)^(r-m-n) times the
/// characteristic polynomial of the product of the twist blocks, unit
/// normalized. The fresh variable is named "u"; group variables must not
/// use that name.
pub fn phi(spec: &PennerSpec) -> Result<GroupPoly> {
    check_every_curve_twisted(spec)?;
    let excess = spec.r - spec.m as i64 - spec.n as i64;
    if excess < 0 {
        return Err(Error::DegenerateCurveSystem(excess));
    }
    let mut product = PolyMatrix::identity(spec.m + spec.n, spec.vars());
    for idx in 0..spec.word.len() {
        product = twist_blocks(spec, idx)?.mat_mul(&product)?;
    }
    let cp = char_det(&product, "u")?;
    let um1 = GroupPoly::from_terms(
        cp.vars().to_vec(),
        [
            ({
                let mut e = vec![0i64; cp.vars().len()];
                e[0] = 1;
                e
            }, Integer::from(1)),
            (vec![0i64; cp.vars().len()], Integer::from(-1)),
        ],
    )?;
    cp.mul(&um1.pow(excess as u32))?.normalize_unit()
}

/// True iff phi is invariant under inverting every group variable, the
/// algebraic symmetry that holds exactly for proportional twist words.
pub fn symmetry_check(spec: &PennerSpec) -> Result<bool> {
    let f = phi(spec)?;
    let mut g = f.clone();
    // variable 0 is the fresh char-poly variable; invert the rest
    for k in 1..f.vars().len() {
        g = g.substitute_inverse(k)?;
    }
    Ok(f == g.normalize_unit()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn single_curve_spec(word: Vec<PennerStep>) -> PennerSpec {
        let inter = PolyMatrix::build(&["t"], &[&[&[(2, &[0])]]]);
        PennerSpec::new(1, 1, inter, word, 2, true).unwrap()
    }

    fn step(kind: TwistKind, mults: &[i64]) -> PennerStep {
        PennerStep {
            kind,
            multiplicities: mults.to_vec(),
        }
    }

    fn two_by_three_intersection() -> PolyMatrix {
        PolyMatrix::build(
            &["t"],
            &[
                &[&[(1, &[1]), (1, &[0])], &[(1, &[0])]],
                &[&[(1, &[1]), (4, &[0])], &[(1, &[0]), (1, &[-1])]],
                &[&[(2, &[1])], &[(2, &[0])]],
            ],
        )
    }

    fn crosscap_spec(word: Vec<PennerStep>) -> PennerSpec {
        PennerSpec::new(3, 2, two_by_three_intersection(), word, 14, true).unwrap()
    }

    #[test]
    fn zero_multiplicity_step_gives_identity_block() {
        let spec = crosscap_spec(vec![
            step(TwistKind::A, &[0, 0, 0]),
            step(TwistKind::B, &[1, 1]),
        ]);
        let blk = twist_blocks(&spec, 0).unwrap();
        assert_eq!(blk, PolyMatrix::identity(5, vec!["t".into()]));
    }

    #[test]
    fn a_step_embeds_the_intersection_matrix() {
        let spec = crosscap_spec(vec![
            step(TwistKind::A, &[1, 1, 1]),
            step(TwistKind::B, &[1, 1]),
        ]);
        let blk = twist_blocks(&spec, 0).unwrap();
        for i in 0..3 {
            for j in 0..2 {
                assert_eq!(blk.entry(i, 3 + j), spec.intersection().entry(i, j));
            }
        }
        // b-step carries the transposed, variable-inverted matrix
        let blk_b = twist_blocks(&spec, 1).unwrap();
        assert_eq!(
            blk_b.entry(3, 0),
            &spec.intersection().entry(0, 0).substitute_inverse(0).unwrap()
        );
    }

    #[test]
    fn scalar_curve_system_blocks_and_phi() {
        let spec = single_curve_spec(vec![step(TwistKind::A, &[1]), step(TwistKind::B, &[1])]);
        let blk = twist_blocks(&spec, 0).unwrap();
        let expect = PolyMatrix::build(
            &["t"],
            &[&[&[(1, &[0])], &[(2, &[0])]], &[&[], &[(1, &[0])]]],
        );
        assert_eq!(blk, expect);

        let f = phi(&spec).unwrap();
        assert_eq!(
            f,
            GroupPoly::build(&["u", "t"], &[(1, &[2, 0]), (-6, &[1, 0]), (1, &[0, 0])])
        );

        let doubled = single_curve_spec(vec![step(TwistKind::A, &[2]), step(TwistKind::B, &[2])]);
        assert_eq!(
            phi(&doubled).unwrap(),
            GroupPoly::build(&["u", "t"], &[(1, &[2, 0]), (-18, &[1, 0]), (1, &[0, 0])])
        );

        assert!(symmetry_check(&spec).unwrap());
    }

    #[test]
    fn degenerate_curve_systems_are_rejected() {
        let inter = PolyMatrix::build(&["t"], &[&[&[(1, &[0])]]]);
        let spec = PennerSpec::new(
            1,
            1,
            inter,
            vec![step(TwistKind::A, &[1]), step(TwistKind::B, &[1])],
            1,
            true,
        )
        .unwrap();
        assert!(matches!(
            phi(&spec),
            Err(Error::DegenerateCurveSystem(-1))
        ));
    }

    #[test]
    fn untwisted_curves_are_rejected() {
        let spec = crosscap_spec(vec![
            step(TwistKind::A, &[1, 0, 1]),
            step(TwistKind::B, &[1, 1]),
        ]);
        assert!(matches!(phi(&spec), Err(Error::UntwistedCurve(ref c)) if c == "a2"));
    }

    #[test]
    fn words_must_alternate_and_rotate_to_a_first() {
        let inter = PolyMatrix::build(&["t"], &[&[&[(2, &[0])]]]);
        assert!(matches!(
            PennerSpec::new(
                1,
                1,
                inter.clone(),
                vec![step(TwistKind::A, &[1]), step(TwistKind::A, &[1])],
                2,
                true
            ),
            Err(Error::WordNotAlternating)
        ));
        let rotated = PennerSpec::new(
            1,
            1,
            inter,
            vec![step(TwistKind::B, &[1]), step(TwistKind::A, &[1])],
            2,
            true,
        )
        .unwrap();
        assert_eq!(rotated.word()[0].kind, TwistKind::A);
    }

    #[test]
    fn twist_blocks_are_unipotent() {
        let spec = crosscap_spec(vec![
            step(TwistKind::A, &[2, 1, 1]),
            step(TwistKind::B, &[2, 1]),
        ]);
        for idx in 0..2 {
            let blk = twist_blocks(&spec, idx).unwrap();
            let det = blk.det().unwrap();
            assert_eq!(det, GroupPoly::build(&["t"], &[(1, &[0])]));
        }
    }

    #[test]
    fn cyclic_rotation_preserves_char_det() {
        let spec = crosscap_spec(vec![
            step(TwistKind::A, &[1, 1, 1]),
            step(TwistKind::B, &[1, 1]),
            step(TwistKind::A, &[2, 1, 1]),
            step(TwistKind::B, &[2, 1]),
        ]);
        let blocks: Vec<PolyMatrix> = (0..4).map(|i| twist_blocks(&spec, i).unwrap()).collect();
        let id = PolyMatrix::identity(5, vec!["t".into()]);
        let prod = |order: &[usize]| {
            order
                .iter()
                .fold(id.clone(), |acc, i| blocks[*i].mat_mul(&acc).unwrap())
        };
        let direct = char_det(&prod(&[0, 1, 2, 3]), "u").unwrap();
        let rotated = char_det(&prod(&[1, 2, 3, 0]), "u").unwrap();
        assert_eq!(direct, rotated);
    }

    fn collapse_all_group_vars(p: &GroupPoly) -> GroupPoly {
        let mut out = p.clone();
        while out.num_vars() > 1 {
            out = out.collapse_var(1).unwrap();
        }
        out
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn proportional_words_are_symmetric(x1 in 1i64..=3, y1 in 1i64..=3, x2 in 1i64..=3, y2 in 1i64..=3) {
            // every step is a scalar multiple of one base vector per kind
            let prop_spec = crosscap_spec(vec![
                step(TwistKind::A, &[x1, x1, x1]),
                step(TwistKind::B, &[y1, y1]),
                step(TwistKind::A, &[x2, x2, x2]),
                step(TwistKind::B, &[y2, y2]),
            ]);
            prop_assert!(symmetry_check(&prop_spec).unwrap());
        }

        #[test]
        fn phi_specializes_consistently(v1 in 1i64..=2, w1 in 1i64..=2) {
            let spec = single_curve_spec(vec![
                step(TwistKind::A, &[v1]),
                step(TwistKind::B, &[w1]),
            ]);
            let f = collapse_all_group_vars(&phi(&spec).unwrap());
            let blocks: Vec<PolyMatrix> = (0..2).map(|i| twist_blocks(&spec, i).unwrap()).collect();
            let prod = blocks[1].mat_mul(&blocks[0]).unwrap();
            let collapsed = prod.map_entries(|e| e.collapse_var(0).unwrap());
            let cp = char_det(&collapsed, "u").unwrap();
            prop_assert_eq!(f.normalize_unit().unwrap(), cp.normalize_unit().unwrap());
        }
    }
}
