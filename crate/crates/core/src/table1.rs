//! Reference spectrum for V₀ = 3.4 fm⁻¹, δ = 0.25 fm⁻¹, M = 5 fm⁻¹, as
//! printed (values in fm⁻¹, printed precision kept).

use crate::model::QuantumNumbers;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Table1Row {
    pub qn: QuantumNumbers,
    /// α = β = 1: (E¹, E²).
    pub ring: (f64, f64),
    /// α = β = 0: (E¹, E²).
    pub hulthen: (f64, f64),
}

const fn row(n: u32, nt: u32, m: u32, ring: (f64, f64), hulthen: (f64, f64)) -> Table1Row {
    Table1Row {
        qn: QuantumNumbers::new(n, nt, m),
        ring,
        hulthen,
    }
}

pub const TABLE1: [Table1Row; 15] = [
    row(0, 0, 0, (-4.995583758, -4.139490168), (-4.996058414, -4.720283669)),
    row(1, 0, 0, (-4.988883706, -3.351144541), (-4.990126164, -4.388096150)),
    row(1, 0, 1, (-4.983219226, -3.181185632), (-4.983417636, -3.949703384)),
    row(1, 1, 0, (-4.972069376, -1.450852722), (-4.975125259, -3.429332733)),
    row(1, 1, 1, (-4.964591276, -1.33435789), (-4.965242671, -2.851556752)),
    row(2, 0, 0, (-4.979466843, -2.494855449), (-4.981810530, -3.951310489)),
    row(2, 0, 1, (-4.972286615, -2.346989231), (-4.972714353, -3.431743639)),
    row(2, 1, 0, (-4.957273060, -0.642877021), (-4.962026060, -2.854773363)),
    row(2, 1, 1, (-4.948594597, -0.544726664), (-4.949737250, -2.243800108)),
    row(2, 2, 0, (-4.927892096, 0.866047610), (-4.935838511, -1.619431412)),
    row(2, 2, 1, (-4.918016190, 0.933230388), (-4.920319274, -0.998615904)),
    row(3, 0, 0, (-4.967330159, -1.644145559), (-4.971102883, -3.433355109)),
    row(3, 0, 1, (-4.958826910, -1.517571480), (-4.959607143, -2.857192280)),
    row(3, 1, 0, (-4.958826910, -1.517571480), (-4.946508429, -2.247028930)),
    row(3, 1, 1, (-4.92998072, 0.1758391135), (-4.931796375, -1.623473548)),
];

/// Printed ring-shaped cells that duplicate another row verbatim and are
/// contradicted by direct solution of the energy equation.
pub const SUSPECT_RING_ROWS: [QuantumNumbers; 1] = [QuantumNumbers::new(3, 1, 0)];
