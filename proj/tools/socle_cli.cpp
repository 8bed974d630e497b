#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <set>
#include <sstream>
#include <string>

#include "socle/branching.hpp"
#include "socle/coefficients.hpp"
#include "socle/finite_rank.hpp"
#include "socle/gt.hpp"
#include "socle/lr.hpp"
#include "socle/verify.hpp"

using nlohmann::json;
using namespace socle;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json toJson(const BigInt& v) {
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
    return v.str();
}

json toJson(const ExtendedNat& v) { return v.isInfinite() ? json("inf") : toJson(v.value()); }

json toJson(const Partition& p) { return p.parts(); }

json toJson(const Bipartition& b) { return json::array({toJson(b.pos), toJson(b.neg)}); }

json toJson(const SimpleModule& m) {
    json j{{"family", familyName(m.family)}, {"lambda", toJson(m.lambda)}};
    if (m.family == Family::GL) j["mu"] = toJson(m.mu);
    return j;
}

json toJson(const SocleLayers& layers) {
    json out = json::array();
    for (const auto& layer : layers) {
        json row = json::array();
        for (const auto& [m, x] : layer) row.push_back({{"module", toJson(m)}, {"mult", toJson(x)}});
        out.push_back(row);
    }
    return out;
}

template <class Map>
json mapJson(const Map& m) {
    json out = json::array();
    for (const auto& [k, v] : m) out.push_back({{"weight", toJson(k)}, {"mult", toJson(v)}});
    return out;
}

json parseJsonText(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError("malformed JSON in " + what + ": " + e.what());
    }
}

// A file path or inline JSON text.
json loadJson(const std::string& arg, const std::string& what) {
    auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return parseJsonText(arg, what);
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot read " + what + " file " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return parseJsonText(ss.str(), what);
}

Partition partitionFrom(const json& j) {
    if (j.is_null()) return {};
    if (!j.is_array()) throw std::invalid_argument("partition must be an array");
    return Partition(j.get<std::vector<int>>());
}

Bipartition bipartitionFrom(const json& j) {
    if (j.is_object()) return {partitionFrom(j.value("lambda", json::array())), partitionFrom(j.value("mu", json::array()))};
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("bipartition must be [lambda, mu]");
    return {partitionFrom(j[0]), partitionFrom(j[1])};
}

ExtendedNat extendedFrom(const json& j) {
    if (j.is_string()) return ExtendedNat::parse(j.get<std::string>());
    if (j.is_number_integer() && j.get<long long>() >= 0) return ExtendedNat(j.get<long long>());
    throw std::invalid_argument("expected a nonnegative integer or \"inf\"");
}

Family familyFrom(const json& j) { return parseFamily(j.get<std::string>()); }

SimpleModule moduleFrom(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("module must be an object");
    SimpleModule m;
    m.family = familyFrom(j.at("family"));
    m.lambda = partitionFrom(j.value("lambda", json::array()));
    m.mu = partitionFrom(j.value("mu", json::array()));
    return m;
}

EmbeddingSpec specFrom(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("spec must be an object");
    static const std::set<std::string> known{"ambient", "sub", "k", "l", "a1", "a2", "b", "c1", "d"};
    for (const auto& [key, _] : j.items())
        if (!known.count(key)) throw InvalidSpec("unknown spec field " + key);
    EmbeddingSpec s;
    s.ambient = j.contains("ambient") ? familyFrom(j.at("ambient")) : Family::GL;
    s.sub = j.contains("sub") ? familyFrom(j.at("sub")) : s.ambient;
    s.k = j.value("k", 1);
    s.l = j.value("l", 0);
    auto ext = [&](const char* key, const ExtendedNat& fallback) {
        return j.contains(key) ? extendedFrom(j.at(key)) : fallback;
    };
    s.a1 = ext("a1", 0);
    s.a2 = ext("a2", 0);
    s.b = ext("b", 0);
    bool classicalAmbient = s.ambient == Family::SP || s.ambient == Family::SO;
    s.c1 = ext("c1", classicalAmbient ? s.a1 : ExtendedNat(0));
    s.d = ext("d", classicalAmbient ? s.b : ExtendedNat(0));
    return s;
}

std::string keyOr(const json& j, const char* key, const std::string& fallback) {
    return j.contains(key) ? j.at(key).get<std::string>() : fallback;
}

json coefficient(const std::string& name, const json& args) {
    auto P = [&](const char* k) { return partitionFrom(args.value(k, json::array())); };
    auto B = [&](const char* k) { return bipartitionFrom(args.at(k)); };
    auto I = [&](const char* k, int fallback) { return args.value(k, fallback); };
    auto E = [&](const char* k) { return extendedFrom(args.at(k)); };
    Family fam = args.contains("family") ? familyFrom(args.at("family")) : Family::GL;
    if (name == "lr") return lr(P("lambda"), P("mu"), P("nu"));
    if (name == "gt") return toJson(gtMult(P("lambda"), P("sigma"), E("k")));
    if (name == "smallC") return toJson(smallC(B("lm"), B("alpha"), B("beta")));
    if (name == "smallD") return toJson(smallD(B("target"), B("alpha"), B("beta")));
    if (name == "bigC" || name == "bigD") {
        std::vector<Bipartition> betas;
        for (const auto& b : args.at("betas")) betas.push_back(bipartitionFrom(b));
        return toJson(name == "bigC" ? bigC(B("lm"), betas) : bigD(B("lm"), betas));
    }
    if (name == "diag") {
        const auto& m = diagExpand(B("lm"), I("k", 1), I("l", 0));
        if (args.contains("target")) return toJson(diagMult(B("lm"), I("k", 1), I("l", 0), B("target")));
        return mapJson(m);
    }
    if (name == "tildeC") {
        if (fam == Family::GL) {
            if (args.contains("target")) return toJson(tildeCGl(E("a"), B("lm"), B("target")));
            return mapJson(tildeCGlExpand(E("a"), B("lm")));
        }
        if (args.contains("target")) return toJson(tildeCClassical(fam, E("a"), P("lambda"), P("target")));
        return mapJson(tildeCClassicalExpand(fam, E("a"), P("lambda")));
    }
    if (name == "K") {
        if (fam == Family::GL) return toJson(kCoeffGl(I("p", 0), I("q", 0), I("r", 0), E("a")));
        return toJson(kCoeffClassical(fam, I("d", 0), I("r", 0), E("a")));
    }
    if (name == "T") {
        std::string br = keyOr(args, "branch", "finite");
        if (br != "finite" && br != "stable") throw std::invalid_argument("branch must be finite or stable");
        TBranch branch = br == "finite" ? TBranch::Finite : TBranch::Stable;
        if (fam == Family::GL) return toJson(tCoeffGl(E("a"), B("lm"), B("mid"), B("low"), branch));
        return toJson(tCoeffClassical(fam, E("a"), P("lambda"), P("mid"), P("low"), branch));
    }
    if (name == "abPair")
        return {{"a", toJson(abPairA(fam, P("lambda"), P("mu"), P("nu")))},
                {"b", toJson(abPairB(P("lambda"), P("mu"), P("nu")))}};
    if (name == "chainA" || name == "chainB") {
        std::vector<Partition> mus;
        for (const auto& m : args.at("mus")) mus.push_back(partitionFrom(m));
        return toJson(name == "chainA" ? chainA(fam, P("lambda"), mus) : chainB(P("lambda"), mus));
    }
    if (name == "typeIII") {
        SimpleModule m = moduleFrom(args.at("module"));
        return toJson(layersTypeIII(m.family, familyFrom(args.at("sub")), I("k", 1), I("l", 0), m));
    }
    throw UsageError("unknown coefficient " + name);
}

SimpleModule moduleFromFlags(const std::string& family, const std::string& lambda, const std::string& mu) {
    return {parseFamily(family), partitionFrom(parseJsonText(lambda, "--lambda")),
            partitionFrom(parseJsonText(mu, "--mu"))};
}

Algebra algebraFrom(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("algebra must look like gl:4");
    return {parseFamily(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

json decompositionJson(const Algebra& alg, const Character& ch) {
    json out = json::array();
    if (alg.family == Family::GL) {
        for (const auto& [hw, m] : decompose(alg, ch))
            out.push_back({{"weight", json::array({toJson(hw.lambda), toJson(hw.mu)})}, {"mult", m}});
    } else {
        for (const auto& [p, m] : decomposeLabels(alg, ch)) out.push_back({{"weight", toJson(p)}, {"mult", m}});
    }
    return out;
}

json verifyJson(const SuiteReport& r) {
    return {{"suite", r.suite}, {"passed", r.passed()}, {"checks", r.checks},
            {"failures", r.failures}, {"seconds", r.seconds}};
}

std::vector<SimpleModule> modulesUpTo(Family f, int degree) {
    std::vector<SimpleModule> out;
    for (int n = 0; n <= degree; ++n) {
        if (f != Family::GL) {
            for (const auto& l : enumeratePartitions(n)) out.push_back({f, l, {}});
            continue;
        }
        for (int p = n; p >= 0; --p)
            for (const auto& l : enumeratePartitions(p))
                for (const auto& m : enumeratePartitions(n - p)) out.push_back({f, l, m});
    }
    return out;
}

int fail(const std::string& code, const std::string& message) {
    std::cout << json{{"error", {{"code", code}, {"message", message}}}}.dump() << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Socle filtrations of tensor modules under embeddings of general tensor type"};
    app.require_subcommand(1);
    int indent = -1;
    app.add_option("--indent", indent, "Pretty-print JSON with this indent");

    std::function<json()> action;

    auto* branch = app.add_subcommand("branch", "Socle layers of a simple module along an embedding");
    std::string specArg, moduleArg, formula = "isotypic";
    int maxLayers = -1;
    branch->add_option("--spec", specArg, "EmbeddingSpec JSON file or inline JSON")->required();
    branch->add_option("--module", moduleArg, "Module JSON, e.g. {\"family\":\"gl\",\"lambda\":[2],\"mu\":[1]}")
        ->required();
    branch->add_option("--max-layers", maxLayers, "Keep at most this many layers");
    branch->add_option("--type-ii", formula, "Type II formula: isotypic or bounds")
        ->check(CLI::IsMember({"isotypic", "bounds"}));
    branch->callback([&] {
        action = [&] {
            json specJson = loadJson(specArg, "--spec");
            json moduleJson = loadJson(moduleArg, "--module");
            auto [spec, module] = normalizeSl(specFrom(specJson), moduleFrom(moduleJson));
            SocleLayers layers;
            if (formula == "bounds") {
                validate(spec);
                bool onlyII = spec.ambient == spec.sub && spec.k == 1 && spec.l == 0 && spec.a1.isZero() &&
                              spec.b.isZero() && spec.c1.isZero() && spec.d.isZero();
                if (!onlyII) throw InvalidSpec("the bounds formula needs a pure type II spec");
                layers = layersTypeIIByBounds(spec.ambient, spec.a2, module);
            } else {
                layers = layersGeneral(spec, module);
            }
            if (maxLayers >= 0 && static_cast<int>(layers.size()) > maxLayers) layers.resize(maxLayers);
            return json{{"layers", toJson(layers)}};
        };
    });

    auto* coeff = app.add_subcommand("coeff", "Evaluate a named coefficient");
    std::string coeffName, coeffArgs = "{}", top, bottom, lamArg, muArg, nuArg, kArg;
    coeff->add_option("name", coeffName, "lr, gt, smallC, bigC, smallD, bigD, diag, tildeC, K, T, abPair, chainA, "
                                         "chainB, typeIII")
        ->required();
    coeff->add_option("--json", coeffArgs, "Arguments as a JSON object");
    coeff->add_option("--top", top, "gt: upper partition");
    coeff->add_option("--bottom", bottom, "gt: lower partition");
    coeff->add_option("--k", kArg, "gt: chain length (integer or inf)");
    coeff->add_option("--lambda", lamArg, "lr: outer partition");
    coeff->add_option("--mu", muArg, "lr: first inner partition");
    coeff->add_option("--nu", nuArg, "lr: second inner partition");
    coeff->callback([&] {
        action = [&] {
            json args = parseJsonText(coeffArgs, "--json");
            if (!args.is_object()) throw UsageError("--json must be an object");
            if (!top.empty()) args["lambda"] = parseJsonText(top, "--top");
            if (!bottom.empty()) args["sigma"] = parseJsonText(bottom, "--bottom");
            if (!kArg.empty()) args["k"] = kArg.find_first_not_of("0123456789") == std::string::npos
                                               ? json(std::stoll(kArg))
                                               : json(kArg);
            if (!lamArg.empty()) args["lambda"] = parseJsonText(lamArg, "--lambda");
            if (!muArg.empty()) args["mu"] = parseJsonText(muArg, "--mu");
            if (!nuArg.empty()) args["nu"] = parseJsonText(nuArg, "--nu");
            return coefficient(coeffName, args);
        };
    });

    auto* dim = app.add_subcommand("dim", "Dimension of a finite-rank simple module");
    std::string dimFamily, dimLambda = "[]", dimMu = "[]";
    int dimRank = 0;
    dim->add_option("--family", dimFamily, "gl, sl, sp or so")->required();
    dim->add_option("--rank", dimRank, "Dimension of the natural module")->required();
    dim->add_option("--lambda", dimLambda, "Partition");
    dim->add_option("--mu", dimMu, "Dual partition (gl only)");
    dim->callback([&] {
        action = [&] {
            SimpleModule m = moduleFromFlags(dimFamily, dimLambda, dimMu);
            return toJson(dimV(m.family, dimRank, m.weight()));
        };
    });

    auto* oracle = app.add_subcommand("oracle", "Finite-rank character computations");
    oracle->require_subcommand(1);
    auto* restrict = oracle->add_subcommand("restrict", "Restrict a simple module and decompose");
    std::string big, small, kind = "diagonal", orLambda = "[]", orMu = "[]";
    int orK = 1, orL = 0, orZ = 0;
    restrict->add_option("--big", big, "Ambient algebra, e.g. gl:6")->required();
    restrict->add_option("--small", small, "Subalgebra, e.g. gl:4")->required();
    restrict->add_option("--kind", kind, "diagonal, blocks, subtype or levi")
        ->check(CLI::IsMember({"diagonal", "blocks", "subtype", "levi"}));
    restrict->add_option("--lambda", orLambda, "Partition");
    restrict->add_option("--mu", orMu, "Dual partition (gl only)");
    restrict->add_option("--k", orK, "Copies of the natural module");
    restrict->add_option("--l", orL, "Copies of the dual module (diagonal)");
    restrict->add_option("--z", orZ, "Trivial summands (diagonal)");
    restrict->callback([&] {
        action = [&] {
            Algebra b = algebraFrom(big), s = algebraFrom(small);
            HighestWeight hw{partitionFrom(parseJsonText(orLambda, "--lambda")),
                             partitionFrom(parseJsonText(orMu, "--mu"))};
            Character ch;
            if (kind == "diagonal") ch = restrictDiagonal(b.rank, hw, orK, orL, orZ, s.rank);
            else if (kind == "blocks") ch = restrictBlocks(b, hw, orK, s);
            else if (kind == "subtype") ch = restrictToSubtype(b.rank, hw, s.family);
            else ch = restrictToLevi(b, hw);
            return decompositionJson(s, ch);
        };
    });
    auto* tensorCmd = oracle->add_subcommand("tensor", "Decompose a tensor product of two simple modules");
    std::string tAlg, tA, tB;
    tensorCmd->add_option("--algebra", tAlg, "Algebra, e.g. sp:4")->required();
    tensorCmd->add_option("--first", tA, "First weight: [lambda, mu] or lambda")->required();
    tensorCmd->add_option("--second", tB, "Second weight")->required();
    tensorCmd->callback([&] {
        action = [&] {
            Algebra alg = algebraFrom(tAlg);
            auto weight = [&](const std::string& text) {
                json j = parseJsonText(text, "weight");
                if (alg.family == Family::GL || alg.family == Family::SL) {
                    Bipartition bp = bipartitionFrom(j);
                    return HighestWeight{bp.pos, bp.neg};
                }
                return HighestWeight{partitionFrom(j), {}};
            };
            return decompositionJson(alg, tensor(irrChar(alg, weight(tA)), irrChar(alg, weight(tB))));
        };
    });

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    VerifyOptions vopt;
    bool verifyFailed = false;
    verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suiteNames()));
    verify->add_option("--size", vopt.size, "Partition size bound");
    verify->add_option("--pq", vopt.pq, "Bound on p and q");
    verify->add_option("--samples", vopt.samples, "Random samples");
    verify->add_option("--seed", vopt.seed, "Random seed");
    verify->callback([&] {
        action = [&] {
            SuiteReport rep = runSuite(suite, vopt);
            verifyFailed = !rep.passed();
            return verifyJson(rep);
        };
    });

    auto* tables = app.add_subcommand("tables", "Layer tables for all modules up to a degree");
    std::string tType = "I", tAmbient = "gl", tSub;
    int tSize = 2, tK = 1, tL = -1;
    std::string ta = "0", tb = "1", tc = "0", td;
    tables->add_option("--type", tType, "I, II or III")->check(CLI::IsMember({"I", "II", "III"}));
    tables->add_option("--ambient", tAmbient, "Ambient family");
    tables->add_option("--sub", tSub, "Subalgebra family (type III)");
    tables->add_option("--size", tSize, "Degree bound");
    tables->add_option("--k", tK, "Copies of V' (type III)");
    tables->add_option("--l", tL, "Copies of V'_* (type III)");
    tables->add_option("--a", ta, "a (type I) or the complement dimension (type II)");
    tables->add_option("--b", tb, "b (type I)");
    tables->add_option("--c", tc, "c (type I, gl)");
    tables->add_option("--d", td, "d (type I, gl); defaults to b");
    tables->callback([&] {
        action = [&] {
            Family amb = parseFamily(tAmbient);
            if (amb == Family::SL) amb = Family::GL;
            Family sub = tSub.empty() ? amb : parseFamily(tSub);
            if (sub == Family::SL) sub = Family::GL;
            ExtendedNat a = ExtendedNat::parse(ta), b = ExtendedNat::parse(tb), c = ExtendedNat::parse(tc);
            ExtendedNat d = td.empty() ? b : ExtendedNat::parse(td);
            int l = tL;
            if (l < 0) l = (amb != Family::GL && sub == Family::GL) ? tK : 0;
            if (tType == "III") {
                EmbeddingSpec s{amb, sub, tK, l, 0, 0, 0, 0, 0};
                validate(s);
            }
            json rows = json::array();
            for (const auto& m : modulesUpTo(amb, tSize)) {
                SocleLayers layers;
                if (tType == "I") layers = layersTypeI(amb, a, b, c, d, m);
                else if (tType == "II") layers = layersTypeII(amb, a, m);
                else layers = layersTypeIII(amb, sub, tK, l, m);
                rows.push_back({{"module", toJson(m)}, {"layers", toJson(layers)}});
            }
            return json{{"type", tType}, {"ambient", familyName(amb)}, {"sub", familyName(sub)}, {"rows", rows}};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        json out = action();
        std::cout << out.dump(indent) << "\n";
        return verifyFailed ? 1 : 0;
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const InvalidSpec& e) {
        return fail("invalid-spec", e.what());
    } catch (const OracleTooLarge& e) {
        return fail("oracle-too-large", e.what());
    } catch (const UnsupportedRank& e) {
        return fail("oracle-too-large", e.what());
    } catch (const OracleError& e) {
        return fail("oracle-error", e.what());
    } catch (const json::exception& e) {
        return fail("invalid-argument", e.what());
    } catch (const std::domain_error& e) {
        return fail("domain-error", e.what());
    } catch (const std::invalid_argument& e) {
        return fail("invalid-argument", e.what());
    } catch (const std::exception& e) {
        return fail("internal", e.what());
    }
}
