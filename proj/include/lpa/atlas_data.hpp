#ifndef LPA_ATLAS_DATA_HPP
#define LPA_ATLAS_DATA_HPP

#include <vector>

namespace lpa::data {

// One published table row: the representative adjacency matrix (rows joined
// by ';', entries by ','), and the algebra name when the table prints one
// ("" where the table prints "---"). Summands in names are sorted by their
// display string and joined with " + ".
struct TableRow {
    const char* matrix;
    const char* name;
};

struct TableSpec {
    const char* id;          // table anchor, e.g. "3.6"
    const char* k0;          // the caption's K0 group, display form
    bool soc_nonzero;        // caption bucket: socle nonzero vs zero
    std::vector<TableRow> rows;
};

// The published classification layout: 1 + 1 + 13 tables, 62 rows in all
// (2 + 8 + 52). Row order follows the publication.
inline const std::vector<TableSpec>& tables() {
    static const std::vector<TableSpec> t = {
        {"1", "", true, {
            {"0", "K"},
            {"1", "K[x,x^-1]"},
        }},
        {"2", "", true, {
            {"0,0;0,0", "K + K"},
            {"0,1;0,0", "M_2(K)"},
            {"1,0;0,0", "K + K[x,x^-1]"},
            {"1,0;1,0", "M_2(K[x,x^-1])"},
            {"1,1;0,0", "T"},
            {"1,0;0,1", "K[x,x^-1] + K[x,x^-1]"},
            {"1,0;1,1", ""},
            {"1,1;1,1", "L(1,2)"},
        }},
        {"3.1", "Z", true, {
            {"0,1,0;0,0,0;0,1,0", "M_3(K)"},
            {"0,1,1;0,0,0;0,1,0", "M_4(K)"},
            {"1,1,0;0,0,0;0,1,0", "T"},
            {"1,1,0;0,0,0;1,1,0", ""},
            {"1,1,0;1,1,0;0,0,0", "K + L(1,2)"},
            {"1,1,1;0,0,0;1,1,0", ""},
            {"1,1,0;0,0,0;1,1,1", ""},
            {"1,1,0;1,1,1;0,0,0", ""},
            {"1,1,1;0,0,0;1,1,1", ""},
        }},
        {"3.2", "Z^2", true, {
            {"0,0,0;0,0,1;0,0,0", "K + M_2(K)"},
            {"0,0,0;1,0,1;0,0,0", "M_2(K) + M_2(K)"},
            {"0,0,0;0,1,0;0,1,0", "K + M_2(K[x,x^-1])"},
            {"0,0,0;0,1,1;0,0,0", "K + T"},
            {"1,0,0;0,0,0;0,1,0", "K[x,x^-1] + M_2(K)"},
            {"1,0,0;1,0,1;0,0,0", "M_2(K) + M_2(K[x,x^-1])"},
            {"0,0,0;1,1,1;0,0,0", ""},
            {"0,0,0;0,1,1;0,0,1", ""},
            {"1,0,0;0,1,1;0,0,0", "K[x,x^-1] + T"},
            {"1,0,0;1,1,1;0,0,0", ""},
            {"1,1,0;0,0,0;0,1,1", ""},
        }},
        {"3.3", "Z^3", true, {
            {"0,0,0;0,0,0;0,0,0", "K + K + K"},
            {"0,0,0;0,0,0;0,0,1", "K + K + K[x,x^-1]"},
            {"0,0,0;0,1,0;0,0,1", "K + K[x,x^-1] + K[x,x^-1]"},
        }},
        {"3.4", "Z x Z2", true, {
            {"0,1,1;0,0,0;1,1,0", ""},
            {"1,1,1;0,0,0;0,1,0", ""},
        }},
        {"3.5", "0", false, {
            {"1,1,0;1,0,1;1,0,1", "L(1,2)"},
            {"1,0,1;1,0,1;1,0,1", "L(1,2)"},
            {"1,1,1;1,1,1;1,0,1", "L(1,2)"},
        }},
        {"3.6", "Z", false, {
            {"0,1,0;0,1,0;0,1,0", "M_3(K[x,x^-1])"},
            {"1,0,0;1,0,1;1,0,0", "M_4(K[x,x^-1])"},
            {"1,1,0;0,1,0;0,1,0", ""},
            {"1,0,0;1,0,1;1,0,1", ""},
            {"1,1,0;1,1,0;0,0,1", "K[x,x^-1] + L(1,2)"},
            {"1,0,0;1,0,1;1,1,1", ""},
            {"1,0,0;1,1,1;1,0,1", ""},
            {"1,1,0;1,1,1;0,0,1", ""},
            {"1,0,1;1,1,1;1,0,1", ""},
            {"1,0,0;1,1,1;1,1,1", ""},
            {"1,1,0;1,1,1;0,1,1", ""},
        }},
        {"3.7", "Z^2", false, {
            {"1,0,0;0,1,0;0,1,0", "K[x,x^-1] + M_2(K[x,x^-1])"},
            {"1,0,0;1,0,1;0,0,1", "M_2(K[x,x^-1]) + M_2(K[x,x^-1])"},
            {"1,0,0;0,1,0;0,1,1", ""},
            {"1,1,0;0,1,0;0,1,1", ""},
            {"1,0,0;1,1,1;0,0,1", ""},
        }},
        {"3.8", "Z^3", false, {
            {"1,0,0;0,1,0;0,0,1", "K[x,x^-1] + K[x,x^-1] + K[x,x^-1]"},
        }},
        {"3.9", "Z2", false, {
            {"1,0,1;1,0,1;1,1,1", "M_2(L(1,3))"},
            {"1,1,1;1,1,1;1,1,1", "L(1,3)"},
        }},
        {"3.10", "Z x Z2", false, {
            {"1,0,0;1,0,1;1,1,0", ""},
            {"1,0,0;1,0,0;1,1,1", ""},
        }},
        {"3.11", "Z2^2", false, {
            {"0,1,1;1,0,1;1,1,0", ""},
        }},
        {"3.12", "Z3", false, {
            {"1,1,1;1,0,1;1,1,1", "L(1,4)"},
        }},
        {"3.13", "Z4", false, {
            {"1,1,1;1,0,1;1,1,0", "M_2(L(1,5))"},
        }},
    };
    return t;
}

// Cross-table isomorphisms established in the closing arguments; each pair
// is merged into a single atlas class. The within-table triple of table 3.5
// is also listed for documentation, although the shift moves already
// identify those three graphs.
struct MergePair {
    int n_a; const char* a;
    int n_b; const char* b;
    const char* anchor;  // where the identification is established
    const char* note;
};

inline const std::vector<MergePair>& merge_records() {
    static const std::vector<MergePair> m = {
        {3, "1,1,0;1,0,1;1,0,1", 3, "1,0,1;1,0,1;1,0,1", "3.5",
         "purely infinite simple with equal (K0, [1]); all of table 3.5 is one algebra"},
        {3, "1,1,0;1,0,1;1,0,1", 3, "1,1,1;1,1,1;1,0,1", "3.5",
         "purely infinite simple with equal (K0, [1]); all of table 3.5 is one algebra"},
        {2, "1,1;0,0", 3, "1,1,0;0,0,0;0,1,0", "2/3.1",
         "both are the Toeplitz algebra T"},
        {2, "1,0;1,1", 3, "1,1,0;0,1,0;0,1,0", "2/3.6",
         "the seventh size-2 graph and the third row of table 3.6 give isomorphic algebras"},
        {2, "1,1;1,1", 3, "1,1,0;1,0,1;1,0,1", "2/3.5",
         "both are L(1,2)"},
    };
    return m;
}

// Names for purely infinite simple classes, keyed by (K0, canonical [1]).
// k0 is the caption form; unit is the Aut-orbit minimum written as comma
// separated residues ("" for the trivial group). Entries with name ""
// record that the publication leaves the algebra unnamed.
struct PisName {
    const char* k0;
    const char* unit;
    const char* name;
};

inline const std::vector<PisName>& pis_names() {
    static const std::vector<PisName> p = {
        {"0", "", "L(1,2)"},
        {"Z2", "0", "M_2(L(1,3))"},
        {"Z2", "1", "L(1,3)"},
        {"Z3", "1", "L(1,4)"},
        {"Z4", "2", "M_2(L(1,5))"},
        {"Z2^2", "", ""},   // table 3.11: unnamed
        {"Z", "", ""},      // table 3.6 last row: unnamed
    };
    return p;
}

// Classes whose name is curated directly rather than derived: the Toeplitz
// algebra (a loop with an exit to a sink).
struct CuratedClassName {
    int n; const char* matrix; const char* name;
};

inline const std::vector<CuratedClassName>& curated_class_names() {
    static const std::vector<CuratedClassName> c = {
        {2, "1,1;0,0", "T"},
    };
    return c;
}

}  // namespace lpa::data

#endif
