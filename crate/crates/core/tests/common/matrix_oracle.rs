//! Matrix-function and certificate reference values computed offline with mpmath
//! (see oracle/matrix_oracle.py).
#![allow(dead_code)]

/// sup_t ||E_{1/2}(t^{1/2} J)||_max for the rotation generator J, and its argmax
pub const ROTATION_SUP_EA: (f64, f64) = (1.2611620384190962, 0.20012822693946355);

/// sup_t ||E_{1/2,1/2}(t^{1/2} J)||_max and its argmax
pub const ROTATION_SUP_EAA: (f64, f64) = (0.7463650443540442, 0.12204179589088032);

/// q = sup_t int_0^t (t-s)^(-1/2) E_(1/2,1/2)(-(t-s)^(1/2)) 0.4/(1+s)^1 ds, and the maximizing t
pub const Q_04_OVER_1PT: (f64, f64) = (0.1403433734350691, 0.537048134048854);

/// q = sup_t int_0^t (t-s)^(-1/2) E_(1/2,1/2)(-(t-s)^(1/2)) 0.8/(1+s)^2 ds, and the maximizing t
pub const Q_08_OVER_1PT2: (f64, f64) = (0.222799656961844, 0.2768780677041145);

/// q = sup_t int_0^t (t-s)^(-1/2) E_(1/2,1/2)(-(t-s)^(1/2)) 3.0/(1+s)^2 ds, and the maximizing t
pub const Q_3_OVER_1PT2: (f64, f64) = (0.835498713606915, 0.27687806770411444);
