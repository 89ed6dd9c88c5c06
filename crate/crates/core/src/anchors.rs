//! Published representative states, one per orbit, transcribed verbatim.
//!
//! Kets are written with the leftmost character as qubit 4 (see
//! [`crate::exact_state::qubit_mask`]). Three rows are known to be
//! defective and are kept as printed: `T14` repeats the `T23` state, `X12/34`
//! repeats the `U12/34` state, and `Vhat4^r` repeats a ket and is not
//! normalized. Labeling detects and reports them.

pub struct Anchor {
    /// Labels this state is listed under; complex and real rows share one
    /// state where both exist.
    pub labels: &'static [&'static str],
    pub ket: &'static str,
}

pub const ANCHORS: &[Anchor] = &[
    Anchor { labels: &["S0", "S0^r"], ket: "|0000>" },
    Anchor { labels: &["T12", "T12^r"], ket: "1/sqrt2(|1110> - |1101>)" },
    Anchor { labels: &["T13", "T13^r"], ket: "1/sqrt2(|1110> - |1011>)" },
    Anchor { labels: &["T14", "T14^r"], ket: "1/sqrt2(|1101> - |1011>)" },
    Anchor { labels: &["T23", "T23^r"], ket: "1/sqrt2(|1101> - |1011>)" },
    Anchor { labels: &["T24", "T24^r"], ket: "1/sqrt2(|1101> - |0111>)" },
    Anchor { labels: &["T34", "T34^r"], ket: "1/sqrt2(|1011> - |0111>)" },
    Anchor { labels: &["U12/34", "U12/34^r"], ket: "1/2(|1111> + |1100> - |0011> - |0000>)" },
    Anchor { labels: &["U13/24", "U13/24^r"], ket: "1/2(|1111> + |1010> - |0101> - |0000>)" },
    Anchor { labels: &["U14/23", "U14/23^r"], ket: "1/2(|1111> + |1001> - |0110> - |0000>)" },
    Anchor { labels: &["V1", "V1^r"], ket: "1/sqrt2(|1001> - |0111>)" },
    Anchor { labels: &["V2", "V2^r"], ket: "1/sqrt2(|1010> - |0111>)" },
    Anchor { labels: &["V3", "V3^r"], ket: "1/sqrt2(|1100> - |0111>)" },
    Anchor { labels: &["V4", "V4^r"], ket: "1/sqrt2(|1100> - |1011>)" },
    Anchor { labels: &["Vhat1^r"], ket: "1/2(|1100> - |1010> - |0110> - |0000>)" },
    Anchor { labels: &["Vhat2^r"], ket: "1/2(|1100> - |1001> - |0101> - |0000>)" },
    Anchor { labels: &["Vhat3^r"], ket: "1/2(|1010> + |1001> - |0011> - |0000>)" },
    Anchor { labels: &["Vhat4^r"], ket: "1/2(|0101> + |0101> - |0011> - |0000>)" },
    Anchor { labels: &["W", "W^r"], ket: "1/sqrt2(|1000> - |0111>)" },
    Anchor {
        labels: &["What^r"],
        ket: "1/(2sqrt2)(|1110> + |1101> + |1011> - |1000> + |0111> - |0100> - |0010> - |0001>)",
    },
    Anchor { labels: &["X12/34", "X12/34^r"], ket: "1/2(|1111> + |1100> - |0011> - |0000>)" },
    Anchor { labels: &["X13/24", "X13/24^r"], ket: "1/2(|1111> - |1010> - |0101> - |0000>)" },
    Anchor { labels: &["X14/23", "X14/23^r"], ket: "1/2(|1111> - |1001> - |0110> - |0000>)" },
    Anchor { labels: &["Xhat12^r"], ket: "1/2(|1100> - |1011> - |0111> - |0000>)" },
    Anchor { labels: &["Xhat34^r"], ket: "1/2(|1110> - |1101> - |0011> - |0000>)" },
    Anchor { labels: &["Xhat24^r"], ket: "1/2(|1110> - |1011> - |0101> - |0000>)" },
    Anchor { labels: &["Xhat14^r"], ket: "1/2(|1101> - |1011> - |0110> - |0000>)" },
    Anchor { labels: &["Xhat13^r"], ket: "1/2(|1101> - |1010> - |0111> - |0000>)" },
    Anchor { labels: &["Xhat23^r"], ket: "1/2(|1110> - |1001> - |0111> - |0000>)" },
];
