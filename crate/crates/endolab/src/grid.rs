//! Sampling grids used by certificates and distance reports.

use serde::{Deserialize, Serialize};

use crate::torus::TorusPoint;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum GridSpec {
    /// Cell-centered n x n grid over the full torus: ((i+1/2)/n, (j+1/2)/n).
    Uniform { n: usize },
    /// Inclusive rectangular window grid (coordinates wrapped on evaluation).
    Window {
        x0: f64,
        x1: f64,
        y0: f64,
        y1: f64,
        nx: usize,
        ny: usize,
    },
}

impl GridSpec {
    pub fn label(&self) -> String {
        match self {
            GridSpec::Uniform { n } => format!("uniform {n}x{n} cell-centered"),
            GridSpec::Window { x0, x1, y0, y1, nx, ny } => {
                format!("window [{x0},{x1}]x[{y0},{y1}] {nx}x{ny}")
            }
        }
    }

    pub fn len(&self) -> usize {
        match self {
            GridSpec::Uniform { n } => n * n,
            GridSpec::Window { nx, ny, .. } => nx * ny,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn points(&self) -> Vec<TorusPoint> {
        match *self {
            GridSpec::Uniform { n } => {
                let mut pts = Vec::with_capacity(n * n);
                for i in 0..n {
                    for j in 0..n {
                        pts.push(TorusPoint::new(
                            (i as f64 + 0.5) / n as f64,
                            (j as f64 + 0.5) / n as f64,
                        ));
                    }
                }
                pts
            }
            GridSpec::Window { x0, x1, y0, y1, nx, ny } => {
                let mut pts = Vec::with_capacity(nx * ny);
                for i in 0..nx {
                    let tx = if nx > 1 { i as f64 / (nx - 1) as f64 } else { 0.5 };
                    for j in 0..ny {
                        let ty = if ny > 1 { j as f64 / (ny - 1) as f64 } else { 0.5 };
                        pts.push(TorusPoint::new(x0 + tx * (x1 - x0), y0 + ty * (y1 - y0)));
                    }
                }
                pts
            }
        }
    }
}
