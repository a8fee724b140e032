//! Named tags for set classes, axioms, characterizations and map
//! properties. Every tag round-trips through its kebab-case name.

use crate::error::Error;

macro_rules! named_tags {
    ($(#[$meta:meta])* $name:ident { $($variant:ident => $text:literal),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
        pub enum $name {
            $($variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn name(self) -> &'static str {
                match self {
                    $($name::$variant => $text),+
                }
            }
        }

        impl std::str::FromStr for $name {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self, Error> {
                match s {
                    $($text => Ok($name::$variant),)+
                    _ => Err(Error::UnknownTag(s.to_string())),
                }
            }
        }

        impl std::fmt::Display for $name {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.write_str(self.name())
            }
        }
    };
}

named_tags! {
    /// Classical derived set classes; each open class has a closed dual.
    KernelClassTag {
        RegularOpen => "regular-open",
        RegularClosed => "regular-closed",
        SemiOpen => "semi-open",
        SemiClosed => "semi-closed",
        AlphaOpen => "alpha-open",
        AlphaClosed => "alpha-closed",
        CstarOpen => "cstar-open",
        CstarClosed => "cstar-closed",
        PiOpen => "pi-open",
        PiClosed => "pi-closed",
    }
}

named_tags! {
    /// SC*-based and generalized closed classes with their open duals.
    GenClassTag {
        ScstarClosed => "scstar-closed",
        ScstarOpen => "scstar-open",
        GClosed => "g-closed",
        GOpen => "g-open",
        RgClosed => "rg-closed",
        RgOpen => "rg-open",
        GscstarClosed => "gscstar-closed",
        GscstarOpen => "gscstar-open",
        ScstargClosed => "scstarg-closed",
        ScstargOpen => "scstarg-open",
    }
}

named_tags! {
    AxiomTag {
        Regular => "regular",
        GRegular => "g-regular",
        ScstarRegular => "scstar-regular",
        SoftlyRegular => "softly-regular",
        AlmostRegular => "almost-regular",
        WeaklyRegular => "weakly-regular",
        AlphaRegular => "alpha-regular",
        StronglyRgRegular => "strongly-rg-regular",
        ScstarT1 => "scstar-t1",
        ScstarT2 => "scstar-t2",
        ScstarT3 => "scstar-t3",
        ScstarNormal => "scstar-normal",
        ScstarCompact => "scstar-compact",
    }
}

named_tags! {
    /// Alternative characterizations of SC*-regularity, each evaluated
    /// independently of the others.
    VariantTag {
        Def21 => "def-2.1",
        T210Ii => "t2.10-ii",
        T210Iii => "t2.10-iii",
        T210Iv => "t2.10-iv",
        T210V => "t2.10-v",
        T211 => "t2.11",
        T412Ii => "t4.12-ii",
        T412Iii => "t4.12-iii",
        T412Iv => "t4.12-iv",
    }
}

named_tags! {
    /// Companion forms of axioms whose agreement with the primary form is
    /// monitored rather than assumed.
    AltAxiomTag {
        ScstarT1Pointwise => "scstar-t1-pointwise",
        ScstarNormalShrinking => "scstar-normal-shrinking",
        ClassicalT1 => "t1",
        ClassicalT2 => "t2",
    }
}

named_tags! {
    MapPropertyTag {
        Continuous => "continuous",
        OpenMap => "open-map",
        ClosedMap => "closed-map",
        Surjective => "surjective",
        Injective => "injective",
        RMap => "r-map",
        CompletelyContinuous => "completely-continuous",
        RcContinuous => "rc-continuous",
        StronglyScstarOpen => "strongly-scstar-open",
        StronglyScstarClosed => "strongly-scstar-closed",
        AlmostScstarIrresolute => "almost-scstar-irresolute",
        ScstarClosedMap => "scstar-closed-map",
        ScstargClosedMap => "scstarg-closed-map",
        GscstarClosedMap => "gscstar-closed-map",
        QuasiScstarClosed => "quasi-scstar-closed",
        ScstarScstargClosed => "scstar-scstarg-closed",
        ScstarGscstarClosed => "scstar-gscstar-closed",
        AlmostGscstarClosed => "almost-gscstar-closed",
        ScstarGscstarContinuous => "scstar-gscstar-continuous",
        ScstarIrresolute => "scstar-irresolute",
        ScstarOpenMap => "scstar-open-map",
        PreScstarOpen => "pre-scstar-open",
    }
}

impl KernelClassTag {
    pub fn dual(self) -> KernelClassTag {
        use KernelClassTag::*;
        match self {
            RegularOpen => RegularClosed,
            RegularClosed => RegularOpen,
            SemiOpen => SemiClosed,
            SemiClosed => SemiOpen,
            AlphaOpen => AlphaClosed,
            AlphaClosed => AlphaOpen,
            CstarOpen => CstarClosed,
            CstarClosed => CstarOpen,
            PiOpen => PiClosed,
            PiClosed => PiOpen,
        }
    }

    pub fn is_open_form(self) -> bool {
        (self as usize).is_multiple_of(2)
    }
}

impl GenClassTag {
    pub fn dual(self) -> GenClassTag {
        use GenClassTag::*;
        match self {
            ScstarClosed => ScstarOpen,
            ScstarOpen => ScstarClosed,
            GClosed => GOpen,
            GOpen => GClosed,
            RgClosed => RgOpen,
            RgOpen => RgClosed,
            GscstarClosed => GscstarOpen,
            GscstarOpen => GscstarClosed,
            ScstargClosed => ScstargOpen,
            ScstargOpen => ScstargClosed,
        }
    }

    pub fn is_closed_form(self) -> bool {
        (self as usize).is_multiple_of(2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for t in KernelClassTag::ALL {
            assert_eq!(t.name().parse::<KernelClassTag>().unwrap(), *t);
            assert_eq!(t.dual().dual(), *t);
            assert_ne!(t.is_open_form(), t.dual().is_open_form());
        }
        for t in GenClassTag::ALL {
            assert_eq!(t.name().parse::<GenClassTag>().unwrap(), *t);
            assert_eq!(t.dual().dual(), *t);
            assert_ne!(t.is_closed_form(), t.dual().is_closed_form());
        }
        for t in MapPropertyTag::ALL {
            assert_eq!(t.to_string().parse::<MapPropertyTag>().unwrap(), *t);
        }
        assert_eq!(AxiomTag::ALL.len(), 13);
        assert_eq!(VariantTag::ALL.len(), 9);
        assert!("bogus".parse::<AxiomTag>().is_err());
    }
}
