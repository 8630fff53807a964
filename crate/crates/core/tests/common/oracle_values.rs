// Generated by tests/oracle/legendre_oracle.py (50-digit mpmath). Do not edit.
#![allow(clippy::excessive_precision)]

/// (n, z, re, im) of the first-kind display
pub const P_HALF: &[(usize, f64, f64, f64)] = &[
    (1, 1.1, 1.0028605218338287304, 1.0028605218338287304), // P
    (1, 1.3, 1.0083296065338734852, 1.0083296065338734852), // P
    (1, 1.5, 1.1089769795162481535, 1.1089769795162481535), // P
    (1, 2.0, 1.4135770268169810409, 1.4135770268169810409), // P
    (1, 2.5, 1.72900327325949454, 1.72900327325949454),     // P
    (2, 1.1, 1.2781118926122261105, 1.2781118926122261105), // P
    (2, 1.3, 1.7368540867760304695, 1.7368540867760304695), // P
    (2, 1.5, 2.3260449748711530717, 2.3260449748711530717), // P
    (2, 2.0, 4.0853459158456707978, 4.0853459158456707978), // P
    (2, 2.5, 6.1984894463393715232, 6.1984894463393715232), // P
    (3, 1.1, 1.7968973022052309072, 1.7968973022052309072), // P
    (3, 1.3, 3.4131361419973134014, 3.4131361419973134014), // P
    (3, 1.5, 5.6092816202130587489, 5.6092816202130587489), // P
    (3, 2.0, 1.3799918462199763529e+1, 1.3799918462199763529e+1), // P
    (3, 2.5, 2.643356993925298025e+1, 2.643356993925298025e+1), // P
    (5, 1.1, 4.0438824966560874001, 4.0438824966560874001), // P
    (5, 1.3, 1.4654776790287496088e+1, 1.4654776790287496088e+1), // P
    (5, 1.5, 3.6095694583079674016e+1, 3.6095694583079674016e+1), // P
    (5, 2.0, 1.7680196937518218767e+2, 1.7680196937518218767e+2), // P
    (5, 2.5, 5.4953411497046273352e+2, 5.4953411497046273352e+2), // P
];

/// (n, z, re, im) of the second-kind display
pub const Q_HALF: &[(usize, f64, f64, f64)] = &[
    (1, 1.1, 0.0, 9.8871718237147365195e-1), // Q
    (1, 1.3, 0.0, 4.7179986008382762221e-1), // Q
    (1, 1.5, 0.0, 3.0389679846937366112e-1), // Q
    (1, 2.0, 0.0, 1.4788483671424248265e-1), // Q
    (1, 2.5, 0.0, 9.0305727153069663634e-2), // Q
    (2, 1.1, 0.0, 6.8667410063678848486e-1), // Q
    (2, 1.3, 0.0, 2.5337665659858271662e-1), // Q
    (2, 1.5, 0.0, 1.3778796788427291668e-1), // Q
    (2, 2.0, 0.0, 5.0103265140426323865e-2), // Q
    (2, 2.5, 0.0, 2.4916245277275507378e-2), // Q
    (3, 1.1, 0.0, 4.553300711678496607e-1),  // Q
    (3, 1.3, 0.0, 1.257457054059702162e-1),  // Q
    (3, 1.5, 0.0, 5.6503915430640306549e-2), // Q
    (3, 2.0, 0.0, 1.4795262417987096549e-2), // Q
    (3, 2.5, 0.0, 5.8376912655182558693e-3), // Q
    (5, 1.1, 0.0, 1.9285630616673448317e-1), // Q
    (5, 1.3, 0.0, 2.905662111851102964e-2),  // Q
    (5, 1.5, 0.0, 8.7612954067403762682e-3), // Q
    (5, 2.0, 0.0, 1.1545371693190564208e-3), // Q
    (5, 2.5, 0.0, 2.8078942417656478243e-4), // Q
];

/// (x, gamma(x))
pub const GAMMA: &[(f64, f64)] = &[
    (0.5, 1.7724538509055160273),
    (0.75, 1.2254167024651776451),
    (1.0, 1.0),
    (1.5, 8.8622692545275801365e-1),
    (2.5, 1.3293403881791370205),
    (3.3, 2.6834373819557687936),
    (5.0, 2.4e+1),
    (7.25, 1.1553810139199896872e+3),
    (10.0, 3.6288e+5),
    (12.5, 1.3684336546556585726e+8),
    (15.1, 1.1394705538254911208e+11),
    (19.9, 9.0406140079547899527e+16),
    (20.0, 1.21645100408832e+17),
];

/// (a, b, c, z, value) for real arguments
pub const HYP2F1: &[(f64, f64, f64, f64, f64)] = &[
    (0.5, 0.75, 0.75, 0.25, 1.154700538379251529),
    (1.3, -0.4, 2.2, 0.9, 7.1053065776241275543e-1),
    (0.5, 2.5, 0.5, -0.95, 1.8832738304784559645e-1),
    (2.3, 2.9, 3.1, -0.6, 3.6263121423851295946e-1),
    (1.2, 1.7, 2.4, 0.5, 1.765192320011453021),
];

/// (n, a, x, re, im) of (x^2-4a)^(-1/4) P(x / (2 sqrt a)) with A = 1, B = 0
pub const HOMOGENEOUS_P: &[(usize, f64, f64, f64, f64)] = &[
    (2, 1.0, 3.0, 1.5555200258842088083, 1.5555200258842088083),
    (3, 2.0, 4.0, 2.7334442981446719149, 2.7334442981446719149),
    (1, 0.25, 2.0, 1.0740862693928204146, 1.0740862693928204146),
];
