//! Published closed forms for the two curve families, transcribed as
//! coefficient lists in descending powers of T. The constructions in
//! [`super::build_family_functions`] must reproduce these exactly.

use super::{Polynomial, RationalFunction};

pub struct FamilyReference {
    pub c: (&'static [&'static str], &'static [&'static str]),
    pub g: (&'static [&'static str], &'static [&'static str]),
    pub f: (&'static [&'static str], &'static [&'static str]),
    pub gamma: (&'static [&'static str], &'static [&'static str]),
    pub d: (&'static [&'static str], &'static [&'static str]),
    pub d_star: (&'static [&'static str], &'static [&'static str]),
    /// Σ_{i,1} / Σ_{i,2}
    pub sigma: (&'static [&'static str], &'static [&'static str]),
}

pub const FAMILY_1: FamilyReference = FamilyReference {
    c: (&["-6040062", "45588900213360"], &["1", "0", "-5477180725633680"]),
    g: (&["-3020031", "45588900213360", "-16541255584016208244080"], &["1", "0", "-5477180725633680"]),
    f: (&["1", "0", "98"], &["1", "0", "-18"]),
    gamma: (&["961"], &["1", "0", "-75"]),
    d: (
        &["45588894173298", "0", "-1641200890885920", "0", "14770814323798008"],
        &["-5477180725633679", "0", "197178506122812676", "0", "-1774606555105302716"],
    ),
    d_star: (
        &["-38340254920051483", "0", "1380250355610428708", "0", "-12422263806891130444"],
        &["5477180725633679", "0", "-197178506122812676", "0", "1774606555105302716"],
    ),
    sigma: (
        &[
            "-12422263806891130444",
            "0",
            "3726679142067339133200",
            "0",
            "855438785181123078355868",
            "0",
            "-170240958125426027001880200",
            "0",
            "-25922975674046723162225380003",
        ],
        &[
            "1774606555105302716",
            "0",
            "-532381966531590814800",
            "0",
            "-122205519918242118687196",
            "0",
            "24320125111216714469579400",
            "0",
            "3703283999134302153081910439",
        ],
    ),
};

pub const FAMILY_2: FamilyReference = FamilyReference {
    c: (&["-7227554", "-64380394481200"], &["1", "0", "407097080892400"]),
    g: (&["-3613777", "-64380394481200", "1471158067696094594800"], &["1", "0", "407097080892400"]),
    f: (&["1", "0", "98"], &["1", "0", "-18"]),
    gamma: (&["121"], &["1", "0", "-63"]),
    d: (
        &["-64380401708754", "0", "2317693623118880", "0", "-20859235062503544"],
        &["407097080892401", "0", "-14655494912126204", "0", "131899454209147204"],
    ),
    d_star: (
        &["-54143923915434895", "0", "1949179850773171028", "0", "-17542605965314382876"],
        &["407097080892401", "0", "-14655494912126204", "0", "131899454209147204"],
    ),
    sigma: (
        &[
            "-17542605965314382876",
            "0",
            "4420736703259224484752",
            "0",
            "-389221676262826716788116",
            "0",
            "13950123258644442355341240",
            "0",
            "-174687125980796870729105719",
        ],
        &[
            "131899454209147204",
            "0",
            "-33238662460705095408",
            "0",
            "2926482501528191763292",
            "0",
            "-104888292579475114826088",
            "0",
            "1313439132893945928914009",
        ],
    ),
};

pub fn reference(family_id: u8) -> Option<&'static FamilyReference> {
    match family_id {
        1 => Some(&FAMILY_1),
        2 => Some(&FAMILY_2),
        _ => None,
    }
}

pub fn descending(cs: &[&str]) -> Polynomial {
    let mut asc: Vec<&str> = cs.to_vec();
    asc.reverse();
    Polynomial::from_strs(&asc)
}

/// The quotient exactly as printed (not canonicalised).
pub fn printed_pair(pair: (&[&str], &[&str])) -> (Polynomial, Polynomial) {
    (descending(pair.0), descending(pair.1))
}

pub fn printed_function(pair: (&[&str], &[&str])) -> RationalFunction {
    let (n, d) = printed_pair(pair);
    RationalFunction::new(n, d).expect("printed denominators are nonzero")
}
