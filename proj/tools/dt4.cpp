#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "dt4/cache.hpp"
#include "dt4/json_io.hpp"
#include "dt4/verifier.hpp"

namespace {

using namespace dt4;

constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitOperational = 2;
constexpr int kSafeOrderCap = 6;  // the independently verified range

json read_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ParseError("cannot open " + path);
    json j = json::parse(is, nullptr, false);
    if (j.is_discarded()) throw ParseError(path + " is not valid JSON");
    return j;
}

void emit_report(const VerificationReport& rep, const std::string& out_path) {
    json j = rep.to_json();
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream os(out_path, std::ios::trunc);
        if (!os) throw Error("cannot write " + out_path);
        os << j.dump(2) << "\n";
        std::cout << (rep.pass ? "pass" : "fail") << " (report written to "
                  << out_path << ")\n";
    }
}

int cmd_enumerate(int dim, int size, long long cap) {
    json out = json::array();
    for (const auto& pi : enumerate_partitions(dim, size, cap))
        out.push_back(partition_to_json(pi));
    std::cout << out.dump() << "\n";
    return kExitPass;
}

int cmd_weight(const std::string& partition_file, const std::string& d_spec,
               bool omega_only) {
    DPartition pi = partition_from_json(read_json_file(partition_file));
    if (pi.dim() != 3)
        throw ParseError("weight needs a solid partition (dim 3)");
    std::string key = pi.canonical_key();

    json payload;
    if (auto cache = cache_from_env()) {
        payload = cache_roundtrip(*cache, key);
    } else {
        payload = weight_payload(key);
    }

    json out;
    if (omega_only) {
        out = json{{"omega", payload["omega"]}, {"omega_c", payload["omega_c"]}};
    } else {
        out = json{{"key", key},
                   {"size", pi.size()},
                   {"height", pi.height()},
                   {"w", payload["w"]},
                   {"omega", payload["omega"]},
                   {"omega_c", payload["omega_c"]},
                   {"sign", payload["sign"]}};
        if (!d_spec.empty()) {
            std::array<Rat, 4> d;
            std::istringstream ds(d_spec);
            std::string item;
            int i = 0;
            while (std::getline(ds, item, ',')) {
                if (i >= 4) throw ParseError("--d needs four values");
                d[i++] = rat_from_string(item);
            }
            if (i != 4) throw ParseError("--d needs four values");
            out["L"] = factored_to_json(tautological_factor<Rat>(pi, d));
        }
    }
    std::cout << out.dump(2) << "\n";
    return kExitPass;
}

SignAssignment signs_for(const VertexTable& table, const std::string& signs_file) {
    if (signs_file.empty()) return table.positivity_signs();
    return load_signs(signs_file);
}

int cmd_verify(const std::string& target, int order, int trials,
               std::uint64_t seed, const std::string& signs_file,
               const std::string& charts_file, const std::string& out_path,
               const std::string& mode, bool dt4_side, bool unsafe_order) {
    bool uses_weights = target != "counting";
    if (uses_weights && order > kSafeOrderCap && !unsafe_order)
        throw ParseError("orders beyond " + std::to_string(kSafeOrderCap) +
                         " are unverified; pass --unsafe-order");

    VerificationReport rep;
    if (target == "counting") {
        if (dt4_side) {
            VertexTable table(order);
            rep = verify_counting(order, &table);
        } else {
            rep = verify_counting(order);
        }
    } else {
        VertexTable table(order);
        if (target == "affine") {
            rep = verify_affine(table, order, trials, seed,
                                signs_for(table, signs_file));
        } else if (target == "nekrasov") {
            rep = verify_nekrasov(table, order, trials, seed,
                                  signs_for(table, signs_file));
        } else if (target == "specconj") {
            rep = verify_specconj(table, order);
        } else if (target == "toric") {
            if (charts_file.empty())
                throw ParseError("verify toric needs --charts");
            rep = toric_series(table, load_charts(charts_file), order, trials,
                               seed, signs_for(table, signs_file));
        } else if (target == "uniqueness") {
            if (mode == "brute")
                rep = sign_uniqueness_brute(table, order, seed);
            else if (mode == "incremental")
                rep = sign_uniqueness_incremental(table, order);
            else
                throw ParseError("uniqueness needs --mode brute|incremental");
        } else {
            throw ParseError("unknown verify target " + target);
        }
    }
    emit_report(rep, out_path);
    return rep.pass ? kExitPass : kExitMathFailure;
}

int cmd_signs_build(int order, const std::string& out_path, bool unsafe_order) {
    if (order > kSafeOrderCap && !unsafe_order)
        throw ParseError("orders beyond " + std::to_string(kSafeOrderCap) +
                         " are unverified; pass --unsafe-order");
    VertexTable table(order);
    auto signs = table.positivity_signs();
    save_signs(signs, out_path);
    std::cout << "wrote " << signs.signs.size() << " signs to " << out_path
              << "\n";
    return kExitPass;
}

struct TableRow {
    std::string key;
    long long size;
    int height;
    Rat omega_abs;
    Rat omega_comb;
};

void emit_table(const std::vector<TableRow>& rows, const std::string& csv_path) {
    if (!csv_path.empty()) {
        std::ofstream os(csv_path, std::ios::trunc);
        if (!os) throw Error("cannot write " + csv_path);
        os << "key,size,height,omega_abs,omega_c,match\n";
        for (const auto& r : rows)
            os << '"' << r.key << "\"," << r.size << ',' << r.height << ','
               << rat_to_string(r.omega_abs) << ',' << rat_to_string(r.omega_comb)
               << ',' << (r.omega_abs == r.omega_comb ? "yes" : "NO") << "\n";
    }
    size_t keyw = 4;
    for (const auto& r : rows) keyw = std::max(keyw, r.key.size());
    std::cout << std::left << std::setw(static_cast<int>(keyw) + 2) << "key"
              << std::setw(6) << "size" << std::setw(8) << "height"
              << std::setw(12) << "|omega|" << std::setw(12) << "omega_c"
              << "match\n";
    for (const auto& r : rows)
        std::cout << std::left << std::setw(static_cast<int>(keyw) + 2) << r.key
                  << std::setw(6) << r.size << std::setw(8) << r.height
                  << std::setw(12) << rat_to_string(r.omega_abs) << std::setw(12)
                  << rat_to_string(r.omega_comb)
                  << (r.omega_abs == r.omega_comb ? "yes" : "NO") << "\n";
}

std::vector<DPartition> appendix_partitions() {
    // Z_pi monomial exponent lists for the explicit size 7..15 entries.
    const std::vector<std::vector<std::array<int, 4>>> all = {
        {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0},
         {0, 0, 0, 1}, {0, 0, 0, 2}},
        {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0},
         {0, 0, 0, 1}, {1, 0, 0, 1}, {0, 0, 0, 2}},
        {{0, 0, 0, 0}, {1, 0, 0, 0}, {2, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0},
         {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 1}, {0, 0, 0, 2}},
        {{0, 0, 0, 0}, {1, 0, 0, 0}, {2, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0},
         {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 1}, {0, 0, 0, 2}},
        {{0, 0, 0, 0}, {1, 0, 0, 0}, {2, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0},
         {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 0, 1},
         {0, 0, 0, 2}},
        {{0, 0, 0, 0}, {1, 0, 0, 0}, {2, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0},
         {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 0, 1},
         {0, 0, 0, 2}, {0, 0, 0, 3}},
        {{0, 0, 0, 0}, {1, 0, 0, 0}, {2, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0},
         {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 0, 1},
         {0, 0, 0, 2}, {0, 0, 0, 3}, {0, 0, 0, 4}},
        {{0, 0, 0, 0}, {1, 0, 0, 0}, {2, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0},
         {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 0, 1},
         {0, 0, 0, 2}, {0, 0, 0, 3}, {0, 0, 0, 4}, {0, 0, 0, 5}},
        {{0, 0, 0, 0}, {1, 0, 0, 0}, {2, 0, 0, 0}, {0, 1, 0, 0}, {0, 2, 0, 0},
         {1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 1},
         {0, 1, 0, 1}, {0, 0, 0, 2}, {0, 0, 0, 3}, {0, 0, 0, 4}, {0, 0, 0, 5}},
    };
    std::vector<DPartition> out;
    for (const auto& exps : all) {
        std::vector<DPartition::Cell> cells;
        for (const auto& e : exps)
            cells.push_back({e[0] + 1, e[1] + 1, e[2] + 1, e[3] + 1});
        out.push_back(DPartition::from_cells(3, cells));
    }
    return out;
}

int cmd_table_appendix(const std::string& csv_path) {
    std::vector<TableRow> rows;
    bool all_match = true;
    for (const auto& pi : appendix_partitions()) {
        auto res = omega_from_dt4(pi);
        Rat oc = omega_c(pi);
        rows.push_back({pi.canonical_key(), pi.size(), pi.height(), res.omega, oc});
        all_match = all_match && res.omega == oc;
    }
    // The 1-partition family: columns along the fourth axis, size <= 10.
    for (int n = 1; n <= 10; ++n)
        for (const auto& lin : enumerate_partitions(1, n)) {
            std::map<DPartition::Index, int> entries;
            int k = 1;
            for (const auto& [idx, v] : lin.entries()) entries[{1, 1, k++}] = v;
            DPartition pi(3, std::move(entries));
            auto res = omega_from_dt4(pi);
            Rat oc = omega_c(pi);
            rows.push_back(
                {pi.canonical_key(), pi.size(), pi.height(), res.omega, oc});
            all_match = all_match && res.omega == oc;
        }
    emit_table(rows, csv_path);
    return all_match ? kExitPass : kExitMathFailure;
}

int cmd_table_omega_c(int dim, int max_size, const std::string& csv_path) {
    std::ostringstream body;
    body << "key,size,height,omega_c\n";
    for (int n = 0; n <= max_size; ++n)
        for (const auto& pi : enumerate_partitions(dim, n))
            body << '"' << pi.canonical_key() << "\"," << pi.size() << ','
                 << pi.height() << ',' << rat_to_string(omega_c(pi)) << "\n";
    if (!csv_path.empty()) {
        std::ofstream os(csv_path, std::ios::trunc);
        if (!os) throw Error("cannot write " + csv_path);
        os << body.str();
    } else {
        std::cout << body.str();
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant DT4 vertex engine for Hilbert schemes of points on C^4"};
    app.require_subcommand(1);

    int dim = 3, size = 0;
    long long cap = 1000000;
    auto* enumerate = app.add_subcommand("enumerate", "List partitions as JSON");
    enumerate->add_option("--dim", dim, "partition dimension")->required();
    enumerate->add_option("--size", size, "partition size")->required();
    enumerate->add_option("--cap", cap, "enumeration cap");

    std::string partition_file, d_spec;
    bool omega_only = false;
    auto* weight = app.add_subcommand("weight", "Vertex weight of one partition");
    weight->add_option("--partition", partition_file, "partition JSON file")
        ->required();
    weight->add_option("--d", d_spec, "bundle character d1,d2,d3,d4");
    weight->add_flag("--omega", omega_only, "print only omega and omega_c");

    std::string target, signs_file, charts_file, out_path, mode;
    int order = 6, trials = 5;
    std::uint64_t seed = 42;
    bool dt4_side = false, unsafe_order = false;
    auto* verify = app.add_subcommand("verify", "Run a conjecture verification");
    verify
        ->add_option("target", target,
                     "affine|nekrasov|counting|specconj|toric|uniqueness")
        ->required();
    verify->add_option("--max-order", order, "truncation order")->required();
    verify->add_option("--trials", trials, "lambda sample count");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--signs", signs_file, "sign assignment JSONL file");
    verify->add_option("--charts", charts_file, "toric chart JSON file");
    verify->add_option("--out", out_path, "report JSON output path");
    verify->add_option("--mode", mode, "uniqueness mode: brute|incremental");
    verify->add_flag("--dt4-side", dt4_side,
                     "also check counting with DT4-derived omegas");
    verify->add_flag("--unsafe-order", unsafe_order,
                     "allow orders beyond the verified range");

    auto* table = app.add_subcommand("table", "Emit result tables");
    std::string which_table, csv_path;
    int table_dim = 3, table_max = 6;
    table->add_option("name", which_table, "appendix-a|omega-c")->required();
    table->add_option("--csv", csv_path, "also write CSV to this path");
    table->add_option("--dim", table_dim, "dimension for omega-c");
    table->add_option("--max-size", table_max, "maximum size for omega-c");

    auto* signs = app.add_subcommand("signs", "Sign assignment tools");
    std::string signs_out;
    int signs_order = 6;
    bool signs_unsafe = false;
    auto* signs_build = signs->add_subcommand("build", "Build positivity signs");
    signs_build->add_option("--max-order", signs_order, "maximum size")->required();
    signs_build->add_option("--out", signs_out, "output JSONL path")->required();
    signs_build->add_flag("--unsafe-order", signs_unsafe,
                          "allow orders beyond the verified range");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitOperational;
    }

    try {
        if (*enumerate) return cmd_enumerate(dim, size, cap);
        if (*weight) return cmd_weight(partition_file, d_spec, omega_only);
        if (*verify)
            return cmd_verify(target, order, trials, seed, signs_file, charts_file,
                              out_path, mode, dt4_side, unsafe_order);
        if (*table) {
            if (which_table == "appendix-a") return cmd_table_appendix(csv_path);
            if (which_table == "omega-c")
                return cmd_table_omega_c(table_dim, table_max, csv_path);
            throw ParseError("unknown table " + which_table);
        }
        if (*signs_build) return cmd_signs_build(signs_order, signs_out, signs_unsafe);
        throw ParseError("no subcommand");
    } catch (const ZeroWeightError& e) {
        std::cerr << "math error: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const UnpairableError& e) {
        std::cerr << "math error: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const PoleAtSpecializationError& e) {
        std::cerr << "math error: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const ZeroAtSpecializationError& e) {
        std::cerr << "math error: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const NotConstantError& e) {
        std::cerr << "math error: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const WrongShapeError& e) {
        std::cerr << "math error: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOperational;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOperational;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOperational;
    }
}
