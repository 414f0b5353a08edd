#pragma once

#include "lieder/cochain.hpp"
#include "lieder/cohomology.hpp"
#include "lieder/deformation.hpp"
#include "lieder/extension.hpp"
#include "lieder/lie2.hpp"
#include "lieder/lie_algebra.hpp"
#include "lieder/report.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lieder::io {

using Json = nlohmann::json;

/// Malformed input, located by a JSON pointer-like path ("/brackets/0,1/2").
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& path, const std::string& message)
        : std::runtime_error(path + ": " + message), path_(path) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// Text to JSON; syntax errors carry the byte offset.
Json parse_text(std::string_view text);
Json read_file(const std::string& path);  // "-" reads stdin

// Scalars and matrices. Rationals are strings "p/q"; JSON integers are
// accepted on input, floats are not. Matrices are arrays of rows.
Rational rational_from_json(const Json& j, const std::string& path);
Json to_json(const Rational& r);
Matrix matrix_from_json(const Json& j, const std::string& path, std::size_t rows, std::size_t cols);
Json to_json(const Matrix& m);

/// {"degree", "g_dim", "v_dim", "values": {"i^j^k": [rational...]}}, indices
/// 0-based, zero values omitted. Tuples may come in any order on input.
Cochain cochain_from_json(const Json& j, const std::string& path);
Json to_json(const Cochain& c);
/// {"degree", "f": cochain, "g": cochain}; "g" absent in degree 1.
CochainPair cochain_pair_from_json(const Json& j, const std::string& path);
Json to_json(const CochainPair& c);

/// {"dim", "basis"?, "brackets": {"i,j": {"k": rational}}, "derivation"?,
///  "representation"?: {"dim", "rho"?: [matrix...], "phi"?: matrix}}
/// Missing derivation, rho or phi mean zero. Structural checks only.
struct AlgebraFile {
    LieDerPair pair;
    std::optional<LieDerRepresentation> representation;

    friend bool operator==(const AlgebraFile&, const AlgebraFile&) = default;
};
AlgebraFile algebra_from_json(const Json& j, const std::string& path = "");
AlgebraFile parse_algebra(std::string_view text);
Json to_json(const LieAlgebra& a);
Json to_json(const AlgebraFile& a);
Json to_json(const LieDerPair& p);

Json to_json(const Report& r);
Json to_json(const CohomologyReport& r);
Json to_json(const CeCohomologyReport& r);

/// {"order", "omega": [cochain...], "phi": [cochain...]}; entry 0 may be
/// left out of both lists, in which case the base pair is used.
TruncatedDeformation deformation_from_json(const Json& j, const std::string& path, const LieDerPair& base);
Json to_json(const TruncatedDeformation& d);
/// {"order", "maps": [matrix...]}; map 0 may be left out (identity).
FormalIso iso_from_json(const Json& j, const std::string& path, std::size_t dim);
Json to_json(const FormalIso& f);

/// {"psi": cochain, "chi": cochain}
CentralCocycle central_cocycle_from_json(const Json& j, const std::string& path);
Json to_json(const CentralCocycle& c);
/// {"total": algebra, "base": algebra, "fiber_dim", "projection", "inclusion"};
/// derivations of the algebras and "fiber_phi" are read by the LieDer variant.
CentralExtension central_extension_from_json(const Json& j, const std::string& path);
LieDerCentralExtension lieder_central_extension_from_json(const Json& j, const std::string& path);
Json to_json(const CentralExtension& e);
Json to_json(const LieDerCentralExtension& e);

/// {"dim0", "dim1", "l2_00": cochain, "l2_01": [matrix...], "l3": cochain}
SkeletalLie2 skeletal_from_json(const Json& j, const std::string& path);
Json to_json(const SkeletalLie2& s);
/// {"X0", "X1", "lX": cochain}
Lie2Derivation lie2_derivation_from_json(const Json& j, const std::string& path);
Json to_json(const Lie2Derivation& d);
/// {"algebra": algebra file with representation, "cocycle": cochain pair}
Triple triple_from_json(const Json& j, const std::string& path);
Json to_json(const Triple& t);
/// {"alpha", "beta", "gamma": cochain, "eta"}
EquivalenceWitness witness_from_json(const Json& j, const std::string& path);
Json to_json(const EquivalenceWitness& w);

}  // namespace lieder::io
