//! Schützenberger evacuation with recorded slide paths.

use crate::tableau::StandardTableau;

/// Cells visited by the empty box during one slide, 1-indexed, starting at (1,1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlidePath {
    cells: Vec<(usize, usize)>,
}

impl SlidePath {
    pub fn new(cells: Vec<(usize, usize)>) -> Self {
        SlidePath { cells }
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn end(&self) -> (usize, usize) {
        *self.cells.last().expect("slide paths are nonempty")
    }

    /// All down moves, then all right moves.
    pub fn is_l_slide(&self) -> bool {
        let mut turned = false;
        for pair in self.cells.windows(2) {
            let right = pair[1].1 > pair[0].1;
            if right {
                turned = true;
            } else if turned {
                return false;
            }
        }
        true
    }

    /// Largest column the path occupies in row `i`.
    pub fn column_in_row(&self, i: usize) -> Option<usize> {
        self.cells.iter().filter(|c| c.0 == i).map(|c| c.1).max()
    }
}

pub fn is_l_slide(path: &SlidePath) -> bool {
    path.is_l_slide()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvacuationTrace {
    pub result: StandardTableau,
    pub paths: Vec<SlidePath>,
}

const HOLE: usize = 0;

/// Removes the top-left entry of `grid`, slides the hole out to a corner and
/// deletes that cell.
fn slide(grid: &mut Vec<Vec<usize>>) -> SlidePath {
    let (mut r, mut c) = (0, 0);
    grid[0][0] = HOLE;
    let mut cells = vec![(1, 1)];
    loop {
        let right = grid[r].get(c + 1).copied();
        let below = grid.get(r + 1).and_then(|row| row.get(c)).copied();
        let (nr, nc) = match (right, below) {
            (Some(a), Some(b)) if b < a => (r + 1, c),
            (Some(_), _) => (r, c + 1),
            (None, Some(_)) => (r + 1, c),
            (None, None) => break,
        };
        grid[r][c] = grid[nr][nc];
        grid[nr][nc] = HOLE;
        r = nr;
        c = nc;
        cells.push((r + 1, c + 1));
    }
    grid[r].pop();
    if grid[r].is_empty() {
        grid.pop();
    }
    SlidePath { cells }
}

pub fn evacuate(sigma: &StandardTableau) -> EvacuationTrace {
    let n = sigma.size();
    let mut grid = sigma.rows();
    let mut result: Vec<Vec<usize>> = grid.iter().map(|row| vec![0; row.len()]).collect();
    let mut paths = Vec::with_capacity(n);
    for j in 1..=n {
        let path = slide(&mut grid);
        let (r, c) = path.end();
        result[r - 1][c - 1] = n + 1 - j;
        paths.push(path);
    }
    let result = StandardTableau::from_rows(&result).expect("evacuation yields a standard tableau");
    EvacuationTrace { result, paths }
}

/// σ∨.
pub fn evacuation(sigma: &StandardTableau) -> StandardTableau {
    evacuate(sigma).result
}

/// Performs a single evacuation slide and decrements every remaining entry.
pub fn first_slide(sigma: &StandardTableau) -> (SlidePath, StandardTableau) {
    if sigma.is_empty() {
        return (SlidePath { cells: Vec::new() }, StandardTableau::empty());
    }
    let mut grid = sigma.rows();
    let path = slide(&mut grid);
    for row in &mut grid {
        for x in row.iter_mut() {
            *x -= 1;
        }
    }
    let rest = StandardTableau::from_rows(&grid).expect("a slide preserves standardness");
    (path, rest)
}

pub fn all_slides_l(sigma: &StandardTableau) -> bool {
    evacuate(sigma).paths.iter().all(SlidePath::is_l_slide)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(r: &[&[usize]]) -> StandardTableau {
        StandardTableau::from_rows(&r.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn worked_slide_example() {
        let sigma = rows(&[&[1, 2, 5, 13], &[3, 4, 9, 15], &[6, 8, 11], &[7, 12, 14], &[10, 16]]);
        let trace = evacuate(&sigma);
        let expected = rows(&[&[1, 3, 5, 7], &[2, 6, 9, 10], &[4, 11, 14], &[8, 13, 16], &[12, 15]]);
        assert_eq!(trace.result, expected);
        assert_eq!(
            trace.paths[0].cells(),
            &[(1, 1), (1, 2), (2, 2), (3, 2), (3, 3), (4, 3)]
        );
        assert!(!trace.paths[0].is_l_slide());
        assert_eq!(evacuation(&expected), sigma);
    }

    #[test]
    fn small_examples() {
        let s: StandardTableau = "12113123".parse().unwrap();
        assert_eq!(evacuation(&s).to_string(), "12312113");
        let row: StandardTableau = "1111".parse().unwrap();
        let trace = evacuate(&row);
        assert_eq!(trace.result, row);
        assert!(trace.paths.iter().all(|p| p.cells().iter().all(|c| c.0 == 1)));
        assert_eq!(evacuation(&StandardTableau::empty()), StandardTableau::empty());
    }

    #[test]
    fn l_slides() {
        let p = SlidePath::new(vec![(1, 1), (2, 1), (3, 1), (3, 2), (3, 3)]);
        assert!(p.is_l_slide());
        assert!(SlidePath::new(vec![(1, 1)]).is_l_slide());
        assert!(!SlidePath::new(vec![(1, 1), (1, 2), (2, 2)]).is_l_slide());
        assert!(all_slides_l(&"123123411213".parse().unwrap()));
        assert!(!all_slides_l(&"1122".parse().unwrap()));
        assert!(all_slides_l(&"11111".parse().unwrap()));
    }

    #[test]
    fn first_slide_of_factored_example_is_l_into_row_three() {
        let s: StandardTableau = "123123411213".parse().unwrap();
        let dual = evacuation(&s);
        assert_eq!(dual.rows(), vec![vec![1, 3, 5, 6, 10], vec![2, 7, 11], vec![4, 8, 12], vec![9]]);
        let first = &evacuate(&s).paths[0];
        assert!(first.is_l_slide());
        assert_eq!(first.cells(), &[(1, 1), (2, 1), (3, 1), (3, 2), (3, 3)]);
    }

    #[test]
    fn slide_columns() {
        let p = SlidePath::new(vec![(1, 1), (1, 2), (2, 2), (3, 2), (3, 3), (4, 3)]);
        assert_eq!(p.column_in_row(1), Some(2));
        assert_eq!(p.column_in_row(3), Some(3));
        assert_eq!(p.column_in_row(5), None);
    }
}
