#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crossbi/catalog.hpp"

namespace crossbi::cli {

struct SpaceEntry {
    std::size_t dim = 0;
    std::optional<Vec> point;
};

struct StructureEntry {
    std::string type;
    // Field name -> referenced map, space or structure name.
    std::map<std::string, std::string> refs;
};

// Structure-constant bundle. Names are kept sorted so that serialization is
// canonical and parse(serialize(b)) serializes to the same bytes.
struct Bundle {
    FieldSpec field;
    std::map<std::string, SpaceEntry> spaces;
    std::map<std::string, LinMap> maps;
    std::map<std::string, StructureEntry> structures;
};

// Throws ParseError / UnknownName / ShapeMismatch with "source:line:" context.
Bundle parse_bundle(const std::string &text, const std::string &source);
std::string serialize(const Bundle &b);

// Resolves a structure by name; the type must match (a hopf structure also
// resolves as a bialgebra, algebra or coalgebra, a bialgebra as either half).
AlgebraData get_algebra(const Bundle &b, const std::string &name);
CoalgebraData get_coalgebra(const Bundle &b, const std::string &name);
BialgebraData get_bialgebra(const Bundle &b, const std::string &name);
HopfData get_hopf(const Bundle &b, const std::string &name);
CrossedData get_crossed(const Bundle &b, const std::string &name);
CoCrossedData get_cocrossed(const Bundle &b, const std::string &name);
TwistingMapData get_twisting_map(const Bundle &b, const std::string &name);
TwistPair get_twist_pair(const Bundle &b, const std::string &name);

// Adds a structure and everything it references under names prefixed by
// `name`.
void put(Bundle &b, const std::string &name, const AlgebraData &a);
void put(Bundle &b, const std::string &name, const CoalgebraData &c);
void put(Bundle &b, const std::string &name, const BialgebraData &x);
void put(Bundle &b, const std::string &name, const HopfData &h);
void put(Bundle &b, const std::string &name, const CrossedData &d);
void put(Bundle &b, const std::string &name, const CoCrossedData &d);
void put(Bundle &b, const std::string &name, const TwistingMapData &d);
void put(Bundle &b, const std::string &name, const TwistPair &p);
void put(Bundle &b, const std::string &name, const QTStructure &q);
void put(Bundle &b, const std::string &name, const MirrorCrossedData &alg,
         const std::optional<MirrorCoCrossedData> &coa);
void put(Bundle &b, const std::string &name, const BaseCrossBialgebra &base);
void put(Bundle &b, const std::string &name, const CrossBialgebraData &d);

// Names accepted by `export`: z<n>, h4, qt-z2, double-z2, double-h4,
// biproduct-z2.
std::vector<std::string> catalog_names();
// Throws UnknownName.
Bundle export_object(const std::string &name, FieldSpec f);

// The full axiom suite of every structure (or only `only`), names prefixed by
// the structure name.
CheckReport check_bundle(const Bundle &b, const std::optional<std::string> &only = {});

// Deterministic machine-readable report.
std::string report_json(const std::string &command, const CheckReport &r, bool verbose);

// argv without the program name. Exit codes: 0 all checks pass, 1 check
// failures, 2 input or shape errors.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace crossbi::cli
