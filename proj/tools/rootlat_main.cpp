#include "rootlat/expr.hpp"
#include "rootlat/report.hpp"
#include "rootlat/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace rootlat;

// Exit code contract: 0 ok, 2 input, 3 cap, 4 precondition, 5 domain.
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitDomain = 5;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw Error("cannot open output file " + out_path);
    os << text;
}

int run_field(const std::string& gens, const std::string& out) {
    FieldDescriptor f = parse_field_gens(gens);
    std::ostringstream os;
    os << "gens: " << field_to_json(f)["gens"].dump() << "\n";
    os << "modulus: " << f.modulus() << "\n";
    os << "subgroup_order: " << f.subgroup().size() << "\n";
    os << "degree: " << f.degree() << "\n";
    emit(os.str(), out);
    return 0;
}

int run_qgraph(const std::string& gens, const std::string& format,
               const std::string& out) {
    FieldDescriptor f = parse_field_gens(gens);
    QGraph g = compute_qk(f);
    if (format == "dot") {
        emit(to_dot(g), out);
    } else if (format == "json") {
        ordered_json j{{"tool", kToolName},
                       {"version", kVersion},
                       {"field", field_to_json(f)},
                       {"qk", qk_to_json(g)}};
        emit(dump_json(j), out);
    } else {
        throw Error("unknown format '" + format + "' (expected json or dot)");
    }
    return 0;
}

int run_classify(const std::string& gens, i64 nmax, const std::string& out) {
    FieldDescriptor f = parse_field_gens(gens);
    emit(dump_json(build_report(f, nmax)), out);
    return 0;
}

int run_extend(const std::string& gens1, const std::string& gens2,
               const std::string& out) {
    FieldDescriptor f1 = parse_field_gens(gens1);
    FieldDescriptor f2 = parse_field_gens(gens2);
    emit(dump_json(extend_report(f1, f2)), out);
    return 0;
}

int run_kronecker(const std::string& expr, const std::string& out) {
    CycElem v = parse_cyc_expr(expr);
    emit(kronecker_classify(v).to_string() + "\n", out);
    return 0;
}

std::optional<i64> parse_i2_label(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.rfind("I2(", 0) == 0 && s.back() == ')') {
        try {
            return std::stoll(s.substr(3, s.size() - 4));
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

int run_roots(const std::string& type_str, const std::string& gram_path,
              bool gens_given, const std::string& gens,
              const std::string& emit_mode, i64 cap, const std::string& out) {
    if (type_str.empty() == gram_path.empty())
        throw Error("exactly one of --type or --gram is required");

    // I2(m) with a field context enumerates the order's roots of unity via
    // the component rule, not the reflection orbit of the generating pair.
    if (!type_str.empty() && gens_given) {
        auto m = parse_i2_label(type_str);
        if (m) {
            FieldDescriptor f = parse_field_gens(gens);
            auto roots = rank2_roots(f, *m);
            if (emit_mode == "count")
                emit(std::to_string(roots.size()) + "\n", out);
            else
                emit(dump_json(rank2_roots_to_json(roots)), out);
            return 0;
        }
    }

    GramMatrix g;
    i64 effective_cap = cap;
    if (!type_str.empty()) {
        CoxeterType t = CoxeterType::parse(type_str);
        g = gram_of_type(t);
        if (effective_cap <= 0) effective_cap = default_cap(t);
    } else {
        std::ifstream is(gram_path);
        if (!is) throw Error("cannot open gram file " + gram_path);
        ordered_json j;
        try {
            is >> j;
        } catch (const nlohmann::json::exception& e) {
            throw Error(std::string("gram file is not valid JSON: ") + e.what());
        }
        g = gram_from_json(j);
        if (effective_cap <= 0) effective_cap = 10000;
    }
    auto roots = enumerate_roots(g, effective_cap);
    if (emit_mode == "count")
        emit(std::to_string(roots.size()) + "\n", out);
    else if (emit_mode == "list")
        emit(dump_json(roots_to_json(roots)), out);
    else
        throw Error("unknown emit mode '" + emit_mode + "' (expected count or list)");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classification of root lattices over totally real abelian fields"};
    app.set_version_flag("--version", std::string(rootlat::kVersion));
    app.require_subcommand(1);

    std::string gens, gens2, out, format = "json", emit_mode = "count";
    std::string type_str, gram_path, expr;
    i64 nmax = 8, cap = 0;

    auto* c_field = app.add_subcommand("field", "Describe the base field");
    c_field->add_option("--gens", gens, "comma-separated generators (empty = Q)");
    c_field->add_option("--out", out, "write output to a file");

    auto* c_qgraph = app.add_subcommand("qgraph", "Emit the divisibility graph Q_K");
    c_qgraph->add_option("--gens", gens, "comma-separated generators (empty = Q)");
    c_qgraph->add_option("--format", format, "json or dot")->capture_default_str();
    c_qgraph->add_option("--out", out, "write output to a file");

    auto* c_classify = app.add_subcommand("classify", "Full classification report");
    c_classify->add_option("--gens", gens, "comma-separated generators (empty = Q)");
    c_classify->add_option("--nmax", nmax, "largest rank for the rank >= 3 table")
        ->capture_default_str();
    c_classify->add_option("--out", out, "write output to a file");

    auto* c_roots = app.add_subcommand("roots", "Enumerate a root system");
    c_roots->add_option("--type", type_str, "catalogued type, e.g. E8 or I2(7)");
    c_roots->add_option("--gram", gram_path, "JSON file with a Gram matrix");
    c_roots->add_option("--gens", gens, "field context for --type I2(m)");
    c_roots->add_option("--emit", emit_mode, "count or list")->capture_default_str();
    c_roots->add_option("--cap", cap, "override the worklist cap");
    c_roots->add_option("--out", out, "write output to a file");

    auto* c_extend = app.add_subcommand("extend", "Map rank-2 classes under scalar extension");
    c_extend->add_option("gens1", gens, "generators of the subfield")->required();
    c_extend->add_option("gens2", gens2, "generators of the extension")->required();
    c_extend->add_option("--out", out, "write output to a file");

    auto* c_kronecker = app.add_subcommand("kronecker", "Classify an algebraic integer");
    c_kronecker->add_option("expression", expr, "expression, e.g. \"cos(pi*1/7)*2\"")
        ->required();
    c_kronecker->add_option("--out", out, "write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (c_field->parsed()) return run_field(gens, out);
        if (c_qgraph->parsed()) return run_qgraph(gens, format, out);
        if (c_classify->parsed()) return run_classify(gens, nmax, out);
        if (c_roots->parsed())
            return run_roots(type_str, gram_path, c_roots->count("--gens") > 0, gens,
                             emit_mode, cap, out);
        if (c_extend->parsed()) return run_extend(gens, gens2, out);
        if (c_kronecker->parsed()) return run_kronecker(expr, out);
    } catch (const rootlat::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const rootlat::NotSubfield& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const rootlat::NotInQK& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const rootlat::NonGenericFunctional& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const rootlat::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const rootlat::InvalidGenerator& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const rootlat::InadmissibleType& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const rootlat::DivisionByZero& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const rootlat::NotAlgebraicInteger& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const rootlat::NotReal& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const rootlat::NotCoprime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const rootlat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
