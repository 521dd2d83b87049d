//! PD-coded planar knot diagrams: parsing, orientation data, face
//! enumeration and the two signed checkerboard graphs.
//!
//! PD convention: a crossing `X(a,b,c,d)` lists the four incident edge
//! labels counterclockwise starting at the incoming under-strand, so the
//! under-strand runs `a -> c` and the over-strand occupies slots `b, d`.
//! Edge labels are consecutive integers, sequential along the strand
//! orientation (the usual labeling of published PD codes); they are
//! normalized to `1..2c` at parse time.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Which checkerboard quadrant class carries positive edge signs. The two
/// quadrant classes at a crossing are "counterclockwise after an
/// under-strand end" (even slots) and "counterclockwise after an
/// over-strand end" (odd slots). The value below is pinned by the
/// cross-route test: the Tutte-route Jones polynomial of the trefoil must
/// equal the bracket-route one exactly, not its t <-> 1/t mirror.
const POSITIVE_EDGE_ON_ODD_QUADRANTS: bool = true;

/// One crossing of a PD code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    slots: [usize; 4],
    sign: i8,
    /// true if the over-strand enters at slot 1 and leaves at slot 3
    over_from_b: bool,
}

impl Crossing {
    pub fn slots(&self) -> [usize; 4] {
        self.slots
    }

    /// Orientation sign of the crossing (`+1` or `-1`).
    pub fn sign(&self) -> i8 {
        self.sign
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceColor {
    Purple,
    Gold,
}

/// A complementary region of the diagram: its corners are `(crossing,
/// quadrant)` pairs, where quadrant `q` lies counterclockwise between
/// slots `q` and `q+1`.
#[derive(Clone, Debug)]
pub struct Face {
    pub corners: Vec<(usize, u8)>,
    pub color: FaceColor,
}

/// A validated single-component knot diagram.
#[derive(Clone, Debug)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    edge_count: usize,
    /// the two `(crossing, slot)` occurrences of each edge label
    occurrences: Vec<[(usize, u8); 2]>,
    faces: Vec<Face>,
    /// face index of each corner, addressed as `crossing * 4 + quadrant`
    corner_face: Vec<usize>,
}

impl PlanarDiagram {
    /// Parse a PD code: whitespace-separated `X(a,b,c,d)` terms, `#`
    /// comments running to end of line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cleaned = String::new();
        for line in text.lines() {
            let line = match line.find('#') {
                Some(pos) => &line[..pos],
                None => line,
            };
            cleaned.push_str(line);
            cleaned.push(' ');
        }
        let mut raw: Vec<[usize; 4]> = Vec::new();
        for term in cleaned.split_whitespace() {
            raw.push(parse_term(term)?);
        }
        if raw.is_empty() {
            return Err(Error::Parse("empty PD code".into()));
        }
        Self::from_raw_crossings(raw)
    }

    /// The 0-crossing unknot diagram.
    pub fn unknot() -> Self {
        Self {
            crossings: Vec::new(),
            edge_count: 0,
            occurrences: Vec::new(),
            faces: vec![
                Face {
                    corners: Vec::new(),
                    color: FaceColor::Purple,
                },
                Face {
                    corners: Vec::new(),
                    color: FaceColor::Gold,
                },
            ],
            corner_face: Vec::new(),
        }
    }

    /// Standard 3-crossing trefoil diagram.
    pub fn trefoil() -> Self {
        Self::parse("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").expect("valid built-in PD")
    }

    /// Standard 4-crossing figure-eight diagram.
    pub fn figure_eight() -> Self {
        Self::parse("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").expect("valid built-in PD")
    }

    fn from_raw_crossings(raw: Vec<[usize; 4]>) -> Result<Self> {
        let c = raw.len();
        let n = 2 * c;

        // labels must be 2c consecutive integers, each appearing twice
        let mut labels: Vec<usize> = raw.iter().flatten().copied().collect();
        labels.sort_unstable();
        let lo = labels[0];
        for (i, &l) in labels.iter().enumerate() {
            let expected = lo + i / 2;
            if l != expected {
                return Err(Error::InvalidDiagram(format!(
                    "edge labels must be {n} consecutive integers each appearing exactly twice \
                     (saw {l} where {expected} was expected)"
                )));
            }
        }
        let normalize = |l: usize| l - lo + 1;
        let succ = |l: usize| l % n + 1;

        let mut occurrences: Vec<Vec<(usize, u8)>> = vec![Vec::new(); n + 1];
        let normalized: Vec<[usize; 4]> = raw
            .iter()
            .map(|t| {
                [
                    normalize(t[0]),
                    normalize(t[1]),
                    normalize(t[2]),
                    normalize(t[3]),
                ]
            })
            .collect();
        for (x, t) in normalized.iter().enumerate() {
            for (s, &l) in t.iter().enumerate() {
                occurrences[l].push((x, s as u8));
            }
        }

        let mut crossings = Vec::with_capacity(c);
        for (x, &[a, b, cc, d]) in normalized.iter().enumerate() {
            if succ(a) != cc {
                return Err(Error::InvalidDiagram(format!(
                    "crossing {x}: under-strand {a} -> {cc} is not label-sequential; \
                     multi-component links are not supported"
                )));
            }
            let b_to_d = succ(b) == d;
            let d_to_b = succ(d) == b;
            let over_from_b = match (b_to_d, d_to_b) {
                (true, false) => true,
                (false, true) => false,
                (true, true) => {
                    // 1-crossing kinks: both congruences hold mod 2, so fall
                    // back to the role of the over edge's other occurrence
                    let other = occurrences[b]
                        .iter()
                        .find(|&&(ox, os)| (ox, os) != (x, 1))
                        .copied()
                        .ok_or_else(|| {
                            Error::InvalidDiagram(format!("crossing {x}: malformed over-strand"))
                        })?;
                    match other.1 {
                        0 => false, // b also arrives as an under-strand, so here it departs
                        2 => true,  // b departs as an under-strand, so here it arrives
                        _ => {
                            return Err(Error::InvalidDiagram(format!(
                                "crossing {x}: over-strand direction is ambiguous"
                            )))
                        }
                    }
                }
                (false, false) => {
                    return Err(Error::InvalidDiagram(format!(
                        "crossing {x}: over-strand {b}/{d} is not label-sequential; \
                         multi-component links are not supported"
                    )))
                }
            };
            // positive crossing: the over-strand enters at the last slot
            let sign = if over_from_b { -1 } else { 1 };
            crossings.push(Crossing {
                slots: [a, b, cc, d],
                sign,
                over_from_b,
            });
        }

        // every edge must arrive exactly once and depart exactly once
        let mut arrivals = vec![0usize; n + 1];
        let mut departures = vec![0usize; n + 1];
        for cr in &crossings {
            let [a, b, cc, d] = cr.slots;
            arrivals[a] += 1;
            departures[cc] += 1;
            if cr.over_from_b {
                arrivals[b] += 1;
                departures[d] += 1;
            } else {
                arrivals[d] += 1;
                departures[b] += 1;
            }
        }
        for l in 1..=n {
            if arrivals[l] != 1 || departures[l] != 1 {
                return Err(Error::InvalidDiagram(format!(
                    "edge {l} has {} arrivals and {} departures; \
                     diagram is not a single oriented knot strand",
                    arrivals[l], departures[l]
                )));
            }
        }

        let occurrences: Vec<[(usize, u8); 2]> = (1..=n)
            .map(|l| [occurrences[l][0], occurrences[l][1]])
            .collect();

        let (faces, corner_face) = compute_faces(&crossings, &occurrences)?;

        Ok(Self {
            crossings,
            edge_count: n,
            occurrences,
            faces,
            corner_face,
        })
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Number of edges (strand arcs), `2c` for a knot diagram.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sum of crossing orientation signs.
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|cr| i64::from(cr.sign)).sum()
    }

    /// True iff crossings alternate over/under along the strand, i.e. every
    /// edge joins an under-strand end (even slot) to an over-strand end
    /// (odd slot).
    pub fn is_alternating(&self) -> bool {
        self.occurrences
            .iter()
            .all(|&[(_, s1), (_, s2)]| (s1 % 2) != (s2 % 2))
    }

    /// The complementary regions; there are always `c + 2` of them.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    fn face_at(&self, crossing: usize, quadrant: u8) -> usize {
        self.corner_face[crossing * 4 + quadrant as usize]
    }

    /// The two checkerboard graphs, `(purple, gold)`: one vertex per face
    /// of the color, one signed edge per crossing joining the two
    /// same-colored faces meeting there. The graphs are planar duals; a
    /// nugatory crossing shows up as a loop.
    pub fn checkerboard_graphs(&self) -> (Multigraph, Multigraph) {
        let mut purple_ids = vec![usize::MAX; self.faces.len()];
        let mut gold_ids = vec![usize::MAX; self.faces.len()];
        let (mut np, mut ng) = (0, 0);
        for (i, f) in self.faces.iter().enumerate() {
            match f.color {
                FaceColor::Purple => {
                    purple_ids[i] = np;
                    np += 1;
                }
                FaceColor::Gold => {
                    gold_ids[i] = ng;
                    ng += 1;
                }
            }
        }
        let mut purple = Multigraph::new(np);
        let mut gold = Multigraph::new(ng);
        for x in 0..self.crossings.len() {
            let qf: Vec<usize> = (0..4u8).map(|q| self.face_at(x, q)).collect();
            let (p_odd, pa, pb, ga, gb) = if self.faces[qf[0]].color == FaceColor::Purple {
                (false, qf[0], qf[2], qf[1], qf[3])
            } else {
                (true, qf[1], qf[3], qf[0], qf[2])
            };
            let sign_for = |odd: bool| -> i8 {
                if odd == POSITIVE_EDGE_ON_ODD_QUADRANTS {
                    1
                } else {
                    -1
                }
            };
            purple.add_signed_edge(purple_ids[pa], purple_ids[pb], Some(sign_for(p_odd)));
            gold.add_signed_edge(gold_ids[ga], gold_ids[gb], Some(sign_for(!p_odd)));
        }
        (purple, gold)
    }

    /// The checkerboard graph whose edges are all positive. Requires an
    /// alternating diagram, where each graph is sign-uniform.
    pub fn positive_checkerboard(&self) -> Result<Multigraph> {
        if !self.is_alternating() {
            return Err(Error::NotAlternating);
        }
        let (purple, gold) = self.checkerboard_graphs();
        if self.crossings.is_empty() {
            return Ok(purple);
        }
        match (purple.uniform_sign(), gold.uniform_sign()) {
            (Some(1), Some(-1)) => Ok(purple),
            (Some(-1), Some(1)) => Ok(gold),
            _ => Err(Error::MixedSigns),
        }
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.crossings.is_empty() {
            return f.write_str("(unknot)");
        }
        let terms: Vec<String> = self
            .crossings
            .iter()
            .map(|cr| {
                let [a, b, c, d] = cr.slots;
                format!("X({a},{b},{c},{d})")
            })
            .collect();
        f.write_str(&terms.join(" "))
    }
}

fn parse_term(term: &str) -> Result<[usize; 4]> {
    let inner = term
        .strip_prefix("X(")
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected X(a,b,c,d), found {term:?}")))?;
    let parts: Vec<&str> = inner.split(',').collect();
    if parts.len() != 4 {
        return Err(Error::Parse(format!(
            "crossing needs exactly 4 labels, found {term:?}"
        )));
    }
    let mut out = [0usize; 4];
    for (i, p) in parts.iter().enumerate() {
        out[i] = p
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&l| l > 0)
            .ok_or_else(|| Error::Parse(format!("bad edge label {p:?} in {term:?}")))?;
    }
    Ok(out)
}

/// Faces as orbits of the corner-successor map: follow a dart (a crossing
/// slot being exited) along its edge to the other occurrence, then rotate
/// one slot counterclockwise. Each arrival at slot `s` contributes the
/// corner in quadrant `s`.
fn compute_faces(
    crossings: &[Crossing],
    occurrences: &[[(usize, u8); 2]],
) -> Result<(Vec<Face>, Vec<usize>)> {
    let c = crossings.len();
    let other_end = |x: usize, s: u8| -> (usize, u8) {
        let label = crossings[x].slots[s as usize];
        let [o1, o2] = occurrences[label - 1];
        if o1 == (x, s) {
            o2
        } else {
            o1
        }
    };

    let mut corner_face = vec![usize::MAX; 4 * c];
    let mut dart_seen = vec![false; 4 * c];
    let mut face_corners: Vec<Vec<(usize, u8)>> = Vec::new();
    for start in 0..4 * c {
        if dart_seen[start] {
            continue;
        }
        let mut corners = Vec::new();
        let face_idx = face_corners.len();
        let (mut x, mut s) = (start / 4, (start % 4) as u8);
        loop {
            let dart = x * 4 + s as usize;
            if dart_seen[dart] {
                break;
            }
            dart_seen[dart] = true;
            let (nx, ns) = other_end(x, s);
            corner_face[nx * 4 + ns as usize] = face_idx;
            corners.push((nx, ns));
            x = nx;
            s = (ns + 1) % 4;
        }
        face_corners.push(corners);
    }

    if face_corners.len() != c + 2 {
        return Err(Error::InvalidDiagram(format!(
            "diagram has {} faces, expected {} (non-planar or corrupt PD code)",
            face_corners.len(),
            c + 2
        )));
    }

    // checkerboard 2-coloring: faces across each strand end get opposite
    // colors, i.e. quadrants q and q+1 at any crossing differ
    let mut color = vec![None; face_corners.len()];
    for root in 0..face_corners.len() {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(FaceColor::Purple);
        let mut stack = vec![root];
        while let Some(f) = stack.pop() {
            let fc = color[f].unwrap();
            let opposite = match fc {
                FaceColor::Purple => FaceColor::Gold,
                FaceColor::Gold => FaceColor::Purple,
            };
            for &(x, q) in &face_corners[f] {
                for adj in [(q + 1) % 4, (q + 3) % 4] {
                    let g = corner_face[x * 4 + adj as usize];
                    match color[g] {
                        None => {
                            color[g] = Some(opposite);
                            stack.push(g);
                        }
                        Some(gc) if gc == fc => {
                            return Err(Error::InvalidDiagram(
                                "faces are not checkerboard 2-colorable".into(),
                            ))
                        }
                        Some(_) => {}
                    }
                }
            }
        }
    }

    let faces = face_corners
        .into_iter()
        .zip(color)
        .map(|(corners, color)| Face {
            corners,
            color: color.unwrap(),
        })
        .collect();
    Ok((faces, corner_face))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_trefoil() {
        let d = PlanarDiagram::parse("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.edge_count(), 6);
    }

    #[test]
    fn parse_empty_fails() {
        assert!(matches!(PlanarDiagram::parse(""), Err(Error::Parse(_))));
        assert!(matches!(
            PlanarDiagram::parse("# just a comment\n"),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn parse_accepts_comments_and_shifted_labels() {
        // labels 11..16 normalize to 1..6
        let d = PlanarDiagram::parse(
            "# a trefoil\nX(11,15,12,14) X(13,11,14,16) # two\nX(15,13,16,12)",
        )
        .unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.to_string(), "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)");
    }

    #[test]
    fn parse_rejects_malformed_terms() {
        assert!(matches!(
            PlanarDiagram::parse("X(1,2,3)"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            PlanarDiagram::parse("Y(1,2,3,4)"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            PlanarDiagram::parse("X(1,x,3,4)"),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn parse_rejects_bad_label_multiset() {
        // label 1 appears three times, label 5 once
        assert!(matches!(
            PlanarDiagram::parse("X(1,5,2,4) X(3,1,4,6) X(1,3,6,2)"),
            Err(Error::InvalidDiagram(_))
        ));
    }

    #[test]
    fn parse_rejects_two_component_link() {
        // a Hopf-link style code: every edge label would need two arrivals
        assert!(matches!(
            PlanarDiagram::parse("X(1,3,2,4) X(3,1,4,2)"),
            Err(Error::InvalidDiagram(_))
        ));
    }

    #[test]
    fn trefoil_writhe_and_mirror() {
        let d = PlanarDiagram::trefoil();
        assert_eq!(d.writhe(), 3);
        // the mirror (reversed slot cycle) has opposite writhe
        let m = PlanarDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        assert_eq!(m.writhe(), -3);
    }

    #[test]
    fn figure_eight_writhe_is_zero() {
        assert_eq!(PlanarDiagram::figure_eight().writhe(), 0);
    }

    #[test]
    fn unknot_has_no_crossings() {
        let d = PlanarDiagram::unknot();
        assert_eq!(d.writhe(), 0);
        assert!(d.is_alternating());
        assert_eq!(d.faces().len(), 2);
        let (p, g) = d.checkerboard_graphs();
        assert_eq!((p.vertex_count(), p.edge_count()), (1, 0));
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
    }

    #[test]
    fn alternation_detection() {
        assert!(PlanarDiagram::trefoil().is_alternating());
        assert!(PlanarDiagram::figure_eight().is_alternating());
        // switch one trefoil crossing (rotate its tuple): no longer alternating
        let d = PlanarDiagram::parse("X(4,1,5,2) X(3,1,4,6) X(5,3,6,2)").unwrap();
        assert!(!d.is_alternating());
    }

    #[test]
    fn face_counts() {
        assert_eq!(PlanarDiagram::trefoil().faces().len(), 5);
        assert_eq!(PlanarDiagram::figure_eight().faces().len(), 6);
    }

    #[test]
    fn faces_partition_corners_and_colors_alternate() {
        for d in [PlanarDiagram::trefoil(), PlanarDiagram::figure_eight()] {
            let total: usize = d.faces().iter().map(|f| f.corners.len()).sum();
            assert_eq!(total, 4 * d.crossing_count());
            for x in 0..d.crossing_count() {
                let colors: Vec<FaceColor> =
                    (0..4u8).map(|q| d.faces()[d.face_at(x, q)].color).collect();
                assert_eq!(colors[0], colors[2]);
                assert_eq!(colors[1], colors[3]);
                assert_ne!(colors[0], colors[1]);
            }
        }
    }

    #[test]
    fn trefoil_checkerboard_pair() {
        let d = PlanarDiagram::trefoil();
        let (p, g) = d.checkerboard_graphs();
        let mut vertex_counts = [p.vertex_count(), g.vertex_count()];
        vertex_counts.sort_unstable();
        assert_eq!(vertex_counts, [2, 3]);
        assert_eq!(p.edge_count(), 3);
        assert_eq!(g.edge_count(), 3);
        // triangle on one side, triple edge on the other
        let (tri, theta) = if p.vertex_count() == 3 {
            (p, g)
        } else {
            (g, p)
        };
        assert_eq!(tri.simplify().base_edge_count(), 3);
        assert_eq!(tri.simplify().triangle_count(), 1);
        assert_eq!(theta.simplify().base_edge_count(), 1);
        assert_eq!(theta.simplify().multiplicity(0, 1), 3);
    }

    #[test]
    fn checkerboard_euler_relation_on_fixtures() {
        for d in [PlanarDiagram::trefoil(), PlanarDiagram::figure_eight()] {
            let (p, g) = d.checkerboard_graphs();
            assert_eq!(p.edge_count(), d.crossing_count());
            assert_eq!(g.edge_count(), d.crossing_count());
            assert_eq!(p.vertex_count() + g.vertex_count(), d.crossing_count() + 2);
            assert!(p.is_connected() && g.is_connected());
        }
    }

    #[test]
    fn alternating_diagrams_have_sign_uniform_graphs() {
        for d in [PlanarDiagram::trefoil(), PlanarDiagram::figure_eight()] {
            let (p, g) = d.checkerboard_graphs();
            let signs = [p.uniform_sign(), g.uniform_sign()];
            assert!(
                signs == [Some(1), Some(-1)] || signs == [Some(-1), Some(1)],
                "expected opposite uniform signs, got {signs:?}"
            );
        }
    }

    #[test]
    fn positive_checkerboard_of_right_trefoil_is_the_triangle() {
        // the built-in trefoil has writhe +3; its positive graph is the
        // 3-vertex triangle (the 2-vertex triple edge is the negative one)
        let d = PlanarDiagram::trefoil();
        let g = d.positive_checkerboard().unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.uniform_sign(), Some(1));
    }

    #[test]
    fn positive_checkerboard_rejects_non_alternating() {
        let d = PlanarDiagram::parse("X(4,1,5,2) X(3,1,4,6) X(5,3,6,2)").unwrap();
        assert!(matches!(
            d.positive_checkerboard(),
            Err(Error::NotAlternating)
        ));
    }

    #[test]
    fn kink_gives_a_checkerboard_loop() {
        let d = PlanarDiagram::parse("X(1,1,2,2)").unwrap();
        assert_eq!(d.writhe(), 1);
        assert_eq!(d.faces().len(), 3);
        let (p, g) = d.checkerboard_graphs();
        assert_eq!(p.loop_count() + g.loop_count(), 1);
    }

    #[test]
    fn dual_swaps_the_pair() {
        let d = PlanarDiagram::trefoil();
        let (p, g) = d.checkerboard_graphs();
        let p_dual = crate::graph::dual(&p, &d).unwrap();
        assert_eq!(p_dual.structure_key(), g.structure_key());
        let round_trip = crate::graph::dual(&p_dual, &d).unwrap();
        assert_eq!(round_trip.structure_key(), p.structure_key());
        let stranger = Multigraph::from_edges(2, [(0, 1)]);
        assert!(matches!(
            crate::graph::dual(&stranger, &d),
            Err(Error::NotCheckerboard)
        ));
    }
}
