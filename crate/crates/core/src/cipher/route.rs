use std::str::FromStr;

use super::CipherError;

/// A rectangular character grid stored row by row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    rows: usize,
    cols: usize,
    cells: Vec<char>,
}

impl Grid {
    pub fn new(rows: usize, cols: usize, cells: Vec<char>) -> Result<Self, CipherError> {
        if rows == 0 || cols == 0 || cells.len() != rows * cols {
            return Err(CipherError::InvalidRoute(format!(
                "{} characters do not fill a {rows}x{cols} grid",
                cells.len()
            )));
        }
        Ok(Self { rows, cols, cells })
    }

    /// Builds a grid from equal-length row strings.
    pub fn from_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self, CipherError> {
        let cols = rows.first().map_or(0, |r| r.as_ref().chars().count());
        let mut cells = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            let row: Vec<char> = row.as_ref().chars().collect();
            if row.len() != cols {
                return Err(CipherError::InvalidRoute("rows have different lengths".into()));
            }
            cells.extend(row);
        }
        Self::new(rows.len(), cols, cells)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> char {
        self.cells[row * self.cols + col]
    }

    pub fn row_strings(&self) -> Vec<String> {
        self.cells.chunks(self.cols).map(|r| r.iter().collect()).collect()
    }
}

/// An order in which to visit every cell of a `rows × cols` grid once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RouteSpec {
    rows: usize,
    cols: usize,
    cells: Vec<(usize, usize)>,
}

impl RouteSpec {
    pub fn new(rows: usize, cols: usize, cells: Vec<(usize, usize)>) -> Result<Self, CipherError> {
        if rows == 0 || cols == 0 {
            return Err(CipherError::InvalidRoute("grid has no cells".into()));
        }
        let mut seen = vec![false; rows * cols];
        for &(r, c) in &cells {
            if r >= rows || c >= cols {
                return Err(CipherError::InvalidRoute(format!(
                    "cell ({r}, {c}) is outside the grid"
                )));
            }
            if std::mem::replace(&mut seen[r * cols + c], true) {
                return Err(CipherError::InvalidRoute(format!("cell ({r}, {c}) is visited twice")));
            }
        }
        if cells.len() != rows * cols {
            return Err(CipherError::InvalidRoute(format!(
                "route visits {} of {} cells",
                cells.len(),
                rows * cols
            )));
        }
        Ok(Self { rows, cols, cells })
    }

    pub fn row_major(rows: usize, cols: usize) -> Self {
        let cells = (0..rows).flat_map(|r| (0..cols).map(move |c| (r, c))).collect();
        Self { rows, cols, cells }
    }

    pub fn col_major(rows: usize, cols: usize) -> Self {
        let cells = (0..cols).flat_map(|c| (0..rows).map(move |r| (r, c))).collect();
        Self { rows, cols, cells }
    }

    /// First column downwards, second upwards, and so on.
    pub fn snake_cols(rows: usize, cols: usize) -> Self {
        let mut cells = Vec::with_capacity(rows * cols);
        for c in 0..cols {
            if c % 2 == 0 {
                cells.extend((0..rows).map(|r| (r, c)));
            } else {
                cells.extend((0..rows).rev().map(|r| (r, c)));
            }
        }
        Self { rows, cols, cells }
    }

    /// First row left to right, second right to left, and so on.
    pub fn snake_rows(rows: usize, cols: usize) -> Self {
        let mut cells = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            if r % 2 == 0 {
                cells.extend((0..cols).map(|c| (r, c)));
            } else {
                cells.extend((0..cols).rev().map(|c| (r, c)));
            }
        }
        Self { rows, cols, cells }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    fn check(&self, grid_rows: usize, grid_cols: usize) -> Result<(), CipherError> {
        if (grid_rows, grid_cols) != (self.rows, self.cols) {
            return Err(CipherError::InvalidRoute(format!(
                "route is for a {}x{} grid, got {grid_rows}x{grid_cols}",
                self.rows, self.cols
            )));
        }
        Ok(())
    }
}

impl FromStr for RouteSpec {
    type Err = CipherError;

    /// `<rows>x<cols>:<shape>` with shape one of `row-major`, `col-major`,
    /// `snake-cols`, `snake-rows`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CipherError::InvalidKey(format!("route key `{s}` is not <rows>x<cols>:<shape>"));
        let (dims, shape) = s.trim().split_once(':').ok_or_else(bad)?;
        let (r, c) = dims.split_once('x').ok_or_else(bad)?;
        let rows: usize = r.trim().parse().map_err(|_| bad())?;
        let cols: usize = c.trim().parse().map_err(|_| bad())?;
        if rows == 0 || cols == 0 {
            return Err(bad());
        }
        match shape.trim() {
            "row-major" => Ok(Self::row_major(rows, cols)),
            "col-major" => Ok(Self::col_major(rows, cols)),
            "snake-cols" => Ok(Self::snake_cols(rows, cols)),
            "snake-rows" => Ok(Self::snake_rows(rows, cols)),
            other => Err(CipherError::InvalidKey(format!("unknown route shape `{other}`"))),
        }
    }
}

/// Concatenates the grid cells in route order.
pub fn route_read(grid: &Grid, route: &RouteSpec) -> Result<String, CipherError> {
    route.check(grid.rows(), grid.cols())?;
    Ok(route.cells.iter().map(|&(r, c)| grid.get(r, c)).collect())
}

/// Writes `text` into a grid along the route; inverse of [`route_read`].
pub fn route_write(text: &str, route: &RouteSpec) -> Result<Grid, CipherError> {
    let chars: Vec<char> = text.chars().collect();
    if chars.len() != route.rows * route.cols {
        return Err(CipherError::LengthMismatch(format!(
            "text has {} characters, the route covers {}",
            chars.len(),
            route.rows * route.cols
        )));
    }
    let mut cells = vec![' '; chars.len()];
    for (&ch, &(r, c)) in chars.iter().zip(&route.cells) {
        cells[r * route.cols + c] = ch;
    }
    Grid::new(route.rows, route.cols, cells)
}
