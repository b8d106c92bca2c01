use crate::ConstructionError;
use latcut_geometry::rat::Rat;
use latcut_geometry::{HalfSpace, Polyhedron};

/// A face of `[0,1]^n`: `Some(b)` fixes a coordinate to `b`, `None` leaves it free.
type Face = Vec<Option<bool>>;

/// `Σ_{fixed at 1} x_j - Σ_{fixed at 0} x_j ≤ #(fixed at 1)`, tight on the
/// cube exactly at the face.
fn supporting(face: &Face) -> (Vec<Rat>, Rat) {
    let mut ones = 0i64;
    let normal = face
        .iter()
        .map(|c| match c {
            Some(true) => {
                ones += 1;
                Rat::from_integer(1.into())
            }
            Some(false) => Rat::from_integer((-1).into()),
            None => Rat::from_integer(0.into()),
        })
        .collect();
    (normal, Rat::from_integer(ones.into()))
}

/// Splits faces of the unit cube into pairwise disjoint faces covering
/// `{0,1}^n` until there are `i` of them.
fn cover(n: usize, i: usize) -> Vec<Face> {
    let mut bottom: Face = vec![None; n];
    bottom[n - 1] = Some(false);
    let mut top = bottom.clone();
    top[n - 1] = Some(true);
    let mut faces = vec![bottom, top];
    while faces.len() < i {
        let k = faces.iter().position(|f| f.iter().any(Option::is_none)).expect("a face of positive dimension");
        let j = faces[k].iter().position(Option::is_none).unwrap();
        let mut hi = faces[k].clone();
        faces[k][j] = Some(false);
        hi[j] = Some(true);
        faces.insert(k + 1, hi);
    }
    faces
}

/// Maximal lattice-free polyhedron in `ℝ^n` with exactly `i` facets.
pub fn cube_face_construction(n: usize, i: usize) -> Result<Polyhedron, ConstructionError> {
    if n == 0 || n >= usize::BITS as usize || i < 2 || i > 1usize << n {
        return Err(ConstructionError::OutOfRange);
    }
    let hs = cover(n, i)
        .iter()
        .map(|f| {
            let (a, b) = supporting(f);
            HalfSpace::new(a, b)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Polyhedron::from_hrep(hs, n)?)
}
