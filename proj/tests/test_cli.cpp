#include "doctest.h"
#include "fixtures.hpp"

#include "lieder/cli.hpp"
#include "lieder/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace lieder;
using namespace fx;
namespace io = lieder::io;

namespace {

std::string fixture_path(const std::string& name) { return std::string(LIEDER_FIXTURES) + "/" + name; }

struct Result {
    int code;
    std::string out;
    std::string err;
    io::Json json() const { return io::parse_text(out); }
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

/// Writes a document to a temporary file, removed on destruction.
class TempDoc {
public:
    explicit TempDoc(const io::Json& j) {
        static int counter = 0;
        path_ = (std::filesystem::temp_directory_path() /
                 ("lieder_cli_test_" + std::to_string(++counter) + ".json")).string();
        std::ofstream(path_) << j.dump();
    }
    ~TempDoc() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

Cochain cochain_at(const io::Json& j, const char* key) { return io::cochain_from_json(j.at(key), key); }

io::Json deformation_doc(const LieDerPair& p, const TruncatedDeformation& d) {
    return {{"algebra", io::to_json(p)}, {"deformation", io::to_json(d)}};
}

}  // namespace

TEST_CASE("check subcommands") {
    CHECK(run({"check", "lie", fixture_path("heisenberg.json")}).code == cli::kOk);
    CHECK(run({"check", "lieder", fixture_path("solv4.json")}).code == cli::kOk);
    const Result bad = run({"check", "lie", fixture_path("not_jacobi.json")});
    CHECK(bad.code == cli::kNegative);
    CHECK(bad.json()["violations"][0]["rule"] == "jacobi");

    CHECK(run({"check", "rep", fixture_path("abelian.json")}).code == cli::kOk);
    CHECK(run({"check", "rep", fixture_path("heisenberg.json")}).code == cli::kInputError);

    // Heisenberg with phi = id is not a derivation
    io::Json h = io::parse_text(R"({"dim": 3, "brackets": {"0,1": {"2": "1"}}, "derivation": [[1,0,0],[0,1,0],[0,0,1]]})");
    const TempDoc doc(h);
    const Result r = run({"check", "lieder", doc.path()});
    CHECK(r.code == cli::kNegative);
    CHECK(r.json()["violations"][0]["rule"] == "leibniz");
}

TEST_CASE("cohomology") {
    const Result r = run({"cohomology", "--degree", "2", fixture_path("abelian.json")});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.json()["dim_H"] == 3);
    CHECK(!r.json().contains("representatives"));

    const Result sl = run({"cohomology", "--degree", "2", "--ce", "--representatives", fixture_path("sl2.json")});
    CHECK(sl.json()["dim_H"] == 0);
    CHECK(sl.json()["coefficients"] == "adjoint");
    CHECK(sl.json()["representatives"].empty());

    const Result h = run({"cohomology", "--degree", "1", "--representatives", fixture_path("heisenberg.json")});
    CHECK(h.json()["dim_H"] == 4);
    CHECK(h.json()["representatives"].size() == 4);
    for (const auto& rep : h.json()["representatives"]) {
        const auto c = io::cochain_pair_from_json(rep, "");
        CHECK(partial(c, heisenberg(), adjoint_representation(heisenberg())).is_zero());
    }

    const Result text = run({"cohomology", "--degree", "2", "--format", "text", fixture_path("abelian.json")});
    CHECK(text.out.find("dim_H: 3\n") != std::string::npos);

    CHECK(run({"cohomology", "--degree", "4", fixture_path("abelian.json")}).code == cli::kInputError);
    ::setenv("LIEDER_MAX_DEGREE", "1", 1);
    CHECK(run({"cohomology", "--degree", "2", fixture_path("abelian.json")}).code == cli::kInputError);
    ::setenv("LIEDER_MAX_DEGREE", "5", 1);
    CHECK(run({"cohomology", "--degree", "4", fixture_path("abelian.json")}).code == cli::kOk);
    ::unsetenv("LIEDER_MAX_DEGREE");

    const Result broken = run({"cohomology", "--degree", "2", fixture_path("not_jacobi.json")});
    CHECK(broken.code == cli::kNegative);
    CHECK(broken.json()["ok"] == false);
}

TEST_CASE("input and usage errors") {
    const Result r = run({"check", "lie", fixture_path("bad_rational.json")});
    CHECK(r.code == cli::kInputError);
    CHECK(r.err.find("/brackets/0,1/1") != std::string::npos);
    CHECK(r.out.empty());

    CHECK(run({"check", "lie", fixture_path("missing.json")}).code == cli::kInputError);
    CHECK(run({"check", "lie", "--bogus", fixture_path("heisenberg.json")}).code == cli::kInputError);
    CHECK(run({"nonsense"}).code == cli::kInputError);
    CHECK(run({}).code == cli::kInputError);
    CHECK(run({"check"}).code == cli::kInputError);
    CHECK(run({"cohomology", fixture_path("heisenberg.json")}).code == cli::kInputError);
    CHECK(run({"--format", "xml", "check", "lie", fixture_path("heisenberg.json")}).code == cli::kInputError);
    const Result help = run({"--help"});
    CHECK(help.code == cli::kOk);
    CHECK(help.out.find("cohomology") != std::string::npos);
}

TEST_CASE("deform") {
    const Result ext = run({"deform", "extend", fixture_path("deform_trivial.json")});
    REQUIRE(ext.code == cli::kOk);
    CHECK(ext.json()["extensible"] == true);
    CHECK(io::cochain_pair_from_json(ext.json()["terms"], "").is_zero());

    Gen gen(12);
    const auto p = heisenberg();
    const auto adj = adjoint_representation(p);
    const auto d = gen.deformation(p, 2);
    const TempDoc doc(deformation_doc(p, d));
    CHECK(run({"deform", "check", doc.path()}).code == cli::kOk);

    const Result inf = run({"deform", "infinitesimal", doc.path()});
    const auto c = io::cochain_pair_from_json(inf.json()["infinitesimal"], "");
    CHECK(c == CochainPair(d.omegas[1], d.phis[1]));

    const Result ob = run({"deform", "obstruction", doc.path()});
    const auto o = io::cochain_pair_from_json(ob.json()["obstruction"], "");
    CHECK(partial(o, p, adj).is_zero());
    CHECK(ob.json()["exact"] == is_coboundary(o, p, adj).has_value());

    // an isomorphic image of the trivial deformation trivializes
    const auto moved = apply_iso(p, trivial_deformation(p, 2), gen.iso(3, 2));
    const TempDoc tdoc(deformation_doc(p, moved));
    const Result tr = run({"deform", "trivialize", tdoc.path()});
    REQUIRE(tr.code == cli::kOk);
    const auto f = io::iso_from_json(tr.json()["iso"], "", 3);
    const auto image = apply_iso(p, moved, f);
    CHECK(image == trivial_deformation(p, 2));

    // a nonzero class blocks it; the certificate re-verifies
    const auto rep = lieder_cohomology(p, adj, 2).representatives.at(0);
    auto nontrivial = trivial_deformation(p, 0);
    nontrivial.omegas.push_back(rep.f());
    nontrivial.phis.push_back(rep.g());
    const TempDoc ndoc(deformation_doc(p, nontrivial));
    const Result nt = run({"deform", "trivialize", "--max-order", "1", ndoc.path()});
    REQUIRE(nt.code == cli::kNegative);
    const auto blocking = io::cochain_pair_from_json(nt.json()["blocking"], "");
    CHECK(partial(blocking, p, adj).is_zero());
    CHECK(!is_coboundary(blocking, p, adj).has_value());

    // malformed deformation
    auto broken = deformation_doc(p, d);
    broken["deformation"]["omega"][1]["values"] = io::Json::object({{"0^1", {"1", "1", "1"}}});
    const TempDoc bdoc(broken);
    CHECK(run({"deform", "check", bdoc.path()}).code == cli::kNegative);
}

TEST_CASE("deform extend negative carries a non-exact obstruction") {
    // search zero-derivation fixtures for an obstructed order-1 deformation
    Gen gen(77);
    std::optional<std::pair<LieDerPair, TruncatedDeformation>> found;
    for (int attempt = 0; attempt < 40 && !found; ++attempt)
        for (const auto& n : zero_derivation_pairs()) {
            const auto d = gen.deformation1(n.pair);
            if (!extend_deformation(n.pair, d)) {
                found = {n.pair, d};
                break;
            }
        }
    REQUIRE(found.has_value());
    const auto& [p, d] = *found;
    const TempDoc doc(deformation_doc(p, d));
    const Result r = run({"deform", "extend", doc.path()});
    REQUIRE(r.code == cli::kNegative);
    CHECK(r.json()["extensible"] == false);
    CHECK(r.json()["obstruction_class_nonzero"] == true);
    const auto ob = io::cochain_pair_from_json(r.json()["obstruction"], "");
    const auto adj = adjoint_representation(p);
    CHECK(partial(ob, p, adj).is_zero());
    CHECK(!is_coboundary(ob, p, adj).has_value());
}

TEST_CASE("centext") {
    const Result b = run({"centext", "build", fixture_path("centext_heisenberg.json")});
    REQUIRE(b.code == cli::kOk);
    const io::Json e = b.json()["extension"];
    const auto total = io::algebra_from_json(e["total"]).pair;
    CHECK(total.algebra.bracket(0, 1) == Vector{0, 0, 1});
    CHECK(verify_pair(total).ok());
    CHECK(total.phi == diagonal({1, 1, 2}));
    CHECK(b.json()["verified"]["ok"] == true);

    const Result bad = run({"centext", "build", fixture_path("centext_heisenberg_bad.json")});
    CHECK(bad.code == cli::kNegative);
    CHECK(bad.json()["violations"][0]["rule"] == "p2");

    // build then from-section returns the cocycle
    const TempDoc doc(io::Json{{"extension", e}});
    const Result s = run({"centext", "from-section", doc.path()});
    REQUIRE(s.code == cli::kOk);
    const io::Json input = io::read_file(fixture_path("centext_heisenberg.json"));
    CHECK(io::central_cocycle_from_json(s.json()["cocycle"], "") == io::central_cocycle_from_json(input["cocycle"], ""));

    // another section moves the cocycle by a coboundary
    io::Json shifted{{"extension", e},
                     {"section", io::to_json(Matrix{{1, 0}, {0, 1}, {3, -1}})}};
    const TempDoc sdoc(shifted);
    const Result s2 = run({"centext", "from-section", sdoc.path()});
    const auto c1 = io::central_cocycle_from_json(s.json()["cocycle"], "").as_pair();
    const auto c2 = io::central_cocycle_from_json(s2.json()["cocycle"], "").as_pair();
    const auto base = LieDerPair{LieAlgebra(2), Matrix::identity(2)};
    CHECK(is_coboundary(c2 - c1, base, fiber_representation(base, Matrix{{2}})).has_value());

    const Result cl = run({"centext", "classify", "--representatives", fixture_path("centext_heisenberg.json")});
    CHECK(cl.json()["dim_H"] == 1);
    CHECK(cl.json()["representatives"].size() == 1);
}

TEST_CASE("derpair") {
    const Result no = run({"derpair", "extend", fixture_path("derpair_heisenberg_id.json")});
    REQUIRE(no.code == cli::kNegative);
    CHECK(no.json()["extensible"] == false);
    CHECK(no.json()["obstruction_class_nonzero"] == true);
    // certificate: a CE 2-cocycle with trivial coefficients that is not exact
    const Cochain ob = cochain_at(no.json(), "obstruction");
    const LieAlgebra base(2);
    const Representation triv{1, {Matrix(1, 1), Matrix(1, 1)}};
    CHECK(ce_differential(base, triv, ob).is_zero());
    CHECK(!is_ce_coboundary(ob, base, triv).has_value());

    const Result yes = run({"derpair", "extend", fixture_path("derpair_heisenberg_grading.json")});
    REQUIRE(yes.code == cli::kOk);
    const Matrix phi = io::matrix_from_json(yes.json()["phi_total"], "", 3, 3);
    CHECK(verify_derivation(heisenberg().algebra, phi).ok());
    const Matrix proj{{1, 0, 0}, {0, 1, 0}};
    const Matrix incl{{0}, {0}, {1}};
    CHECK(proj * phi == Matrix::identity(2) * proj);
    CHECK(phi * incl == incl * Matrix{{2}});

    const Result ob2 = run({"derpair", "obstruction", fixture_path("derpair_heisenberg_id.json")});
    CHECK(ob2.code == cli::kOk);
    CHECK(ob2.json()["exact"] == false);
    CHECK(cochain_at(ob2.json(), "obstruction") == ob);

    const Result th = run({"derpair", "theta", fixture_path("theta_abelian.json")});
    CHECK(th.json()["zero"] == false);
    io::Json doc = io::read_file(fixture_path("theta_abelian.json"));
    doc["phi_fiber"] = io::to_json(Matrix{{2}});
    const TempDoc tdoc(doc);
    CHECK(run({"derpair", "theta", tdoc.path()}).json()["zero"] == true);
}

TEST_CASE("lie2") {
    const Result c = run({"lie2", "check", fixture_path("lie2_sl2.json")});
    CHECK(c.code == cli::kOk);
    const Result t = run({"lie2", "to-triple", fixture_path("lie2_sl2.json")});
    REQUIRE(t.code == cli::kOk);
    const Triple triple = io::triple_from_json(t.json(), "");
    CHECK(partial(triple.cocycle, triple.pair, triple.rep).is_zero());
    CHECK(triple.pair.algebra.bracket(0, 1) == Vector{0, 0, 1});

    const TempDoc tdoc(t.json());
    const Result back = run({"lie2", "from-triple", tdoc.path()});
    CHECK(back.json() == io::read_file(fixture_path("lie2_sl2.json")));

    EquivalenceWitness w{Matrix::identity(3), Matrix::identity(1), Cochain(2, 3, 1), Matrix(1, 3)};
    const TempDoc wdoc(io::Json{{"source", t.json()}, {"target", t.json()}, {"witness", io::to_json(w)}});
    const Result eq = run({"lie2", "equiv-check", wdoc.path()});
    CHECK(eq.code == cli::kOk);
    CHECK(eq.json()["induces_isomorphism"] == true);

    w.eta(0, 2) = 1;  // h lies in [g, g]
    const TempDoc wdoc2(io::Json{{"source", t.json()}, {"target", t.json()}, {"witness", io::to_json(w)}});
    const Result neq = run({"lie2", "equiv-check", wdoc2.path()});
    CHECK(neq.code == cli::kNegative);
    CHECK(neq.json()["conditions"]["violations"][0]["rule"] == "e");

    w.alpha = Matrix(3, 3);
    const TempDoc wdoc3(io::Json{{"source", t.json()}, {"target", t.json()}, {"witness", io::to_json(w)}});
    const Result sing = run({"lie2", "equiv-check", wdoc3.path()});
    CHECK(sing.code == cli::kNegative);
    CHECK(sing.json()["violations"][0]["rule"] == "invertible");

    io::Json perturbed = io::read_file(fixture_path("lie2_sl2.json"));
    perturbed["derivation"]["X1"] = io::to_json(Matrix{{1}});
    const TempDoc pdoc(perturbed);
    const Result pc = run({"lie2", "check", pdoc.path()});
    CHECK(pc.code == cli::kNegative);
    CHECK(pc.json()["violations"][0]["rule"] == "der:d");
    CHECK(run({"lie2", "to-triple", pdoc.path()}).code == cli::kNegative);
}
