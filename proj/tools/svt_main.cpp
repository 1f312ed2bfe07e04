#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "svt/bijections.hpp"
#include "svt/checks.hpp"
#include "svt/enumerate.hpp"
#include "svt/generate.hpp"
#include "svt/json_io.hpp"
#include "svt/lattice_path.hpp"
#include "svt/numbers.hpp"
#include "svt/render.hpp"

namespace {

using nlohmann::json;
using namespace svt;

int max_mass_cap() {
    if (const char* env = std::getenv("SVT_MAX_MASS")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("SVT_MAX_MASS must be an integer");
        }
    }
    return 20;
}

void enforce_mass_cap(const Density& rho) {
    const int cap = max_mass_cap();
    if (rho.total_mass() > cap)
        throw std::invalid_argument("total mass " + std::to_string(rho.total_mass()) +
                                    " exceeds the brute-force cap " + std::to_string(cap) +
                                    " (raise SVT_MAX_MASS to override)");
}

Density density_from_flags(const std::string& shape_text, const std::string& density_text,
                           bool shape_given) {
    Density rho = parse_density(density_text);
    if (shape_given) {
        Shape shape = parse_shape(shape_text);
        if (!(shape == rho.shape()))
            throw std::invalid_argument("--shape does not match the density grid");
    }
    return rho;
}

json read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::stringstream buffer;
        buffer << std::cin.rdbuf();
        return json::parse(buffer.str());
    }
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open input file: " + path);
    return json::parse(file);
}

int cmd_generate(const std::string& shape_text, bool shape_given,
                 const std::string& density_text, long long limit, const std::string& format) {
    Density rho = density_from_flags(shape_text, density_text, shape_given);
    enforce_mass_cap(rho);
    long long emitted = 0;
    unsigned long long total = 0;
    bool truncated = false;
    generate_all(rho, [&](const SetValuedTableau& t) {
        ++total;  // the count line always reports the full class size
        if (limit >= 0 && emitted >= limit) {
            truncated = true;
            return true;
        }
        ++emitted;
        if (format == "json")
            std::cout << to_json(t).dump() << "\n";
        else
            std::cout << render_tableau(t) << "\n";
        return true;
    });
    if (format == "json")
        std::cout << json{{"value", std::to_string(total)}}.dump() << "\n";
    else
        std::cout << "count: " << total << (truncated ? " (output truncated)" : "") << "\n";
    return 0;
}

int cmd_count(const std::string& shape_text, bool shape_given, const std::string& density_text,
              const std::string& method, const std::string& format) {
    Density rho = density_from_flags(shape_text, density_text, shape_given);
    Count result;
    if (method == "brute") {
        enforce_mass_cap(rho);
        result = count_by_generation(rho);
    } else {
        TwoRowDensity d = TwoRowDensity::from_density(rho);  // rejects 3+ rows
        if (method == "shift")
            result = count_shift_recursion(d);
        else if (method == "closed")
            result = count_closed_form(d);
        else if (method == "paths")
            result = count_paths_below(p_max(d));
        else
            throw std::invalid_argument("unknown method: " + method);
    }
    if (format == "json")
        std::cout << to_json(result).dump() << "\n";
    else
        std::cout << result << "\n";
    return 0;
}

int cmd_number(const std::string& family, int n, int k, int r, int a, int b, int s, int t,
               const std::string& s_vec_text, const std::string& t_vec_text,
               const std::string& format) {
    Count result;
    if (family == "catalan-k")
        result = catalan_k(n, k);
    else if (family == "raney")
        result = raney(n, k, r);
    else if (family == "raney-convolution")
        result = raney_by_convolution(n, k, r);
    else if (family == "rational")
        result = rational_catalan(a, b);
    else if (family == "tennis")
        result = tennis_count(n, s, t);
    else if (family == "tennis-general") {
        Density rho = parse_density(s_vec_text + ";" + t_vec_text);
        result = tennis_count_general(rho.cells()[0], rho.cells()[1]);
    } else
        throw std::invalid_argument("unknown family: " + family);
    if (format == "json")
        std::cout << to_json(result).dump() << "\n";
    else
        std::cout << result << "\n";
    return 0;
}

int cmd_map(const std::string& name, const std::string& in_path, bool round_trip,
            const std::string& density_text, bool density_given, int k, int r, int s, int t,
            int n, const std::string& format) {
    const bool ascii = format == "ascii";
    if (name == "to-path") {
        SetValuedTableau input = tableau_from_json(read_input(in_path));
        LatticePath path = tableau_to_path(input);
        if (round_trip && !(path_to_tableau(path, density_of(input)) == input))
            throw std::logic_error("round trip failed");
        std::cout << (ascii ? path.steps() + "\n" : to_json(path).dump() + "\n");
    } else if (name == "from-path") {
        if (!density_given) throw std::invalid_argument("from-path requires --density");
        LatticePath path = path_from_json(read_input(in_path));
        Density rho = parse_density(density_text);
        SetValuedTableau image = path_to_tableau(path, rho);
        if (round_trip && !(tableau_to_path(image) == path))
            throw std::logic_error("round trip failed");
        std::cout << (ascii ? render_tableau(image) : to_json(image).dump() + "\n");
    } else if (name == "schutzenberger") {
        SetValuedTableau input = tableau_from_json(read_input(in_path));
        SetValuedTableau image = schutzenberger(input);
        if (round_trip && !(schutzenberger(image) == input))
            throw std::logic_error("round trip failed");
        std::cout << (ascii ? render_tableau(image) : to_json(image).dump() + "\n");
    } else if (name == "density-shift") {
        if (round_trip)
            throw std::invalid_argument(
                "density-shift has no parameter-free inverse; round trip unsupported");
        SetValuedTableau input = tableau_from_json(read_input(in_path));
        DensityShiftResult result = density_shift(input);
        if (ascii)
            std::cout << "shifted: " << result.shifted << "\n" << render_tableau(result.tableau);
        else
            std::cout << json{{"shifted", result.shifted}, {"tableau", to_json(result.tableau)}}
                             .dump()
                      << "\n";
    } else if (name == "raney-concat") {
        RaneyTuple tuple = raney_tuple_from_json(read_input(in_path));
        SetValuedTableau image = raney_concat(tuple);
        if (round_trip) {
            RaneyTuple back = raney_split(image, tuple.k, tuple.r);
            for (std::size_t j = 0; j < tuple.blocks.size(); ++j)
                if (!(back.blocks[j] == tuple.blocks[j])) throw std::logic_error("round trip failed");
        }
        std::cout << (ascii ? render_tableau(image) : to_json(image).dump() + "\n");
    } else if (name == "raney-split") {
        SetValuedTableau input = tableau_from_json(read_input(in_path));
        RaneyTuple tuple = raney_split(input, k, r);
        if (round_trip && !(raney_concat(tuple) == input))
            throw std::logic_error("round trip failed");
        std::cout << (ascii ? render_raney_tuple(tuple) : to_json(tuple).dump() + "\n");
    } else if (name == "tennis-to-tableau") {
        TennisArrangement arr = arrangement_from_json(read_input(in_path));
        SetValuedTableau image = tennis_to_tableau(arr);
        if (round_trip) {
            TennisArrangement back =
                tableau_to_tennis(image, arr.s_vec.at(0), arr.t_vec.at(0), arr.n);
            if (back.lawn != arr.lawn) throw std::logic_error("round trip failed");
        }
        std::cout << (ascii ? render_tableau(image) : to_json(image).dump() + "\n");
    } else if (name == "tableau-to-tennis") {
        SetValuedTableau input = tableau_from_json(read_input(in_path));
        TennisArrangement arr = tableau_to_tennis(input, s, t, n);
        if (round_trip && !(tennis_to_tableau(arr) == input))
            throw std::logic_error("round trip failed");
        std::cout << (ascii ? render_arrangement(arr) : to_json(arr).dump() + "\n");
    } else {
        throw std::invalid_argument("unknown map: " + name);
    }
    return 0;
}

int cmd_verify(const std::string& suite, int max_mass) {
    VerifyBounds bounds = suite == "full" ? VerifyBounds::full() : VerifyBounds::small();
    if (max_mass >= 0) bounds.cap_mass(max_mass);
    auto results = run_all_checks(bounds);
    std::size_t passed = 0;
    for (const auto& result : results) {
        std::cout << (result.passed ? "[PASS] " : "[FAIL] ") << result.name << ": "
                  << result.detail << "\n";
        if (result.passed) ++passed;
    }
    std::cout << "summary: " << passed << "/" << results.size() << " checks passed\n";
    return passed == results.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"standard set-valued Young tableaux: generation, counting, bijections"};
    app.require_subcommand(1);

    std::string shape_text, density_text, format = "ascii";
    long long limit = -1;

    auto* generate = app.add_subcommand("generate", "exhaustively list tableaux of a density");
    auto* gen_shape = generate->add_option("--shape", shape_text, "row lengths, e.g. 2,2");
    generate->add_option("--density", density_text, "grid, rows ';'-separated, e.g. \"2,2;2,2\"");
    generate->add_option("--limit", limit, "emit at most this many tableaux");
    generate->add_option("--format", format)->check(CLI::IsMember({"json", "ascii"}));

    std::string method = "closed";
    auto* count = app.add_subcommand("count", "count tableaux of a density");
    auto* count_shape = count->add_option("--shape", shape_text, "row lengths");
    count->add_option("--density", density_text, "grid");
    count->add_option("--method", method)->check(CLI::IsMember({"brute", "shift", "closed", "paths"}));
    count->add_option("--format", format)->check(CLI::IsMember({"json", "ascii"}));

    std::string family;
    int n = 0, k = 1, r = 1, a = 1, b = 1, s = 1, t = 1;
    std::string s_vec_text, t_vec_text;
    auto* number = app.add_subcommand("number", "closed-form generalized Catalan values");
    number->add_option("--family", family)
        ->required()
        ->check(CLI::IsMember({"catalan-k", "raney", "raney-convolution", "rational", "tennis",
                               "tennis-general"}));
    number->add_option("--n", n);
    number->add_option("--k", k);
    number->add_option("--r", r);
    number->add_option("--a", a);
    number->add_option("--b", b);
    number->add_option("--s", s);
    number->add_option("--t", t);
    number->add_option("--s-vec", s_vec_text, "per-turn additions, e.g. 2,3");
    number->add_option("--t-vec", t_vec_text, "per-turn throws, e.g. 1,2");
    number->add_option("--format", format)->check(CLI::IsMember({"json", "ascii"}));

    std::string map_name, in_path;
    bool round_trip = false;
    auto* map = app.add_subcommand("map", "apply a structural bijection");
    map->add_option("name", map_name, "to-path | from-path | schutzenberger | density-shift | "
                                      "raney-concat | raney-split | tennis-to-tableau | "
                                      "tableau-to-tennis")
        ->required();
    map->add_option("--in", in_path, "JSON input file ('-' for stdin)");
    map->add_flag("--round-trip", round_trip, "apply the inverse and assert identity");
    auto* map_density = map->add_option("--density", density_text, "target density (from-path)");
    map->add_option("--k", k);
    map->add_option("--r", r);
    map->add_option("--s", s);
    map->add_option("--t", t);
    map->add_option("--n", n);
    map->add_option("--format", format)->check(CLI::IsMember({"json", "ascii"}));

    std::string suite = "small";
    int max_mass = -1;
    auto* verify = app.add_subcommand("verify", "run the cross-check suite");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"small", "full"}));
    verify->add_option("--max-mass", max_mass, "clamp every mass bound");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed())
            return cmd_generate(shape_text, gen_shape->count() > 0, density_text, limit, format);
        if (count->parsed())
            return cmd_count(shape_text, count_shape->count() > 0, density_text, method, format);
        if (number->parsed())
            return cmd_number(family, n, k, r, a, b, s, t, s_vec_text, t_vec_text, format);
        if (map->parsed())
            return cmd_map(map_name, in_path, round_trip, density_text,
                           map_density->count() > 0, k, r, s, t, n, format);
        if (verify->parsed()) return cmd_verify(suite, max_mass);
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    return 0;
}
