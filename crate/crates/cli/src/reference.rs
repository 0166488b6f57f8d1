//! Reference values used only for the deviation columns. Nothing here is
//! ever handed to a solver.

/// Ground-state energy `E^(N)` of the quartic oscillator, `N = 1..9`, as
/// `(α = 1/3, α = 0.389)` pairs at `g/4 = 0.1`.
pub const T1_WEAK: [(f64, f64); 9] = [
    (0.561496, 0.56235),
    (0.558592, 0.558614),
    (0.559232, 0.559254),
    (0.559142, 0.559142),
    (0.559143, 0.559143),
    (0.559147, 0.559147),
    (0.559146, 0.559146),
    (0.559146, 0.559146),
    (0.559146, 0.559146),
];

/// Same at `g/4 = 1.0`.
pub const T1_STRONG: [(f64, f64); 9] = [
    (0.83055, 0.849631),
    (0.78297, 0.784942),
    (0.812948, 0.816638),
    (0.801761, 0.802012),
    (0.802206, 0.802487),
    (0.805103, 0.805518),
    (0.803901, 0.803937),
    (0.803115, 0.803072),
    (0.803852, 0.803924),
];

pub const T1_EXACT: (f64, f64) = (0.559146, 0.803770);

/// Isotropic `g*` for `N = 2..6`.
pub const T2_ISO: [f64; 5] = [0.560616, 0.440796, 0.393506, 0.4012, 0.389037];

/// Cubic `(g*, δ*)` for `N = 2..6`; none at `N = 2`.
pub const T2_CUBIC: [Option<(f64, f64)>; 5] = [
    None,
    Some((0.50208, 0.291074)),
    Some((0.400199, 0.037862)),
    Some((0.411057, 0.063068)),
    Some((0.39154, 0.015309)),
];

/// `(b1_cub, b2_cub, b1_iso, b2_iso)` for `N = 4, 5, 6`.
pub const T3: [[f64; 4]; 3] = [
    [0.782796, 0.0048920, 0.784532, -0.00502046],
    [0.764835, 0.00851725, 0.763966, -0.00886277],
    [0.80609, 0.00212717, 0.80658, -0.00214788],
];
