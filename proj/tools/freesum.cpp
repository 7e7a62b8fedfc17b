// Command-line front end. Every subcommand reads polytope documents from file
// arguments (or "-" for stdin), writes JSON to stdout and diagnostics to
// stderr. Exit codes: 0 ok, 2 parse, 3 validation, 4 precondition,
// 5 internal consistency (including self-test failures).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "freesum/bkk.hpp"
#include "freesum/ehrhart.hpp"
#include "freesum/harness.hpp"
#include "freesum/io.hpp"
#include "freesum/random_instances.hpp"
#include "freesum/sums.hpp"
#include "freesum/volume.hpp"

namespace {

using namespace freesum;
using nlohmann::json;

constexpr std::size_t kMaxDim = 8;
constexpr std::size_t kMaxVertices = 64;

enum ExitCode { kOk = 0, kParse = 2, kValidation = 3, kPrecondition = 4, kInternal = 5 };

struct Settings {
    std::string output = "json";
    std::uint64_t seed = 0;
    std::size_t trials = 10;
    std::uint64_t max_points = kDefaultPointBudget;
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void check_desk_scale(const std::string& path, std::size_t dim, std::size_t count) {
    if (dim > kMaxDim)
        throw ValidationError(path + ": ambient dimension " + std::to_string(dim) + " exceeds the limit of " +
                              std::to_string(kMaxDim));
    if (count > kMaxVertices)
        throw ValidationError(path + ": " + std::to_string(count) + " points exceed the limit of " +
                              std::to_string(kMaxVertices));
}

PointDocument load_points(const std::string& path) {
    auto doc = parse_point_document(read_input(path));
    check_desk_scale(path, doc.ambient_dim, doc.points.size());
    if (doc.duplicates_removed)
        std::cerr << "warning: " << path << ": " << doc.duplicates_removed << " duplicate vertex row(s) removed\n";
    return doc;
}

Polytope load_polytope(const std::string& path) {
    auto text = read_input(path);
    auto doc = parse_point_document(text);
    check_desk_scale(path, doc.ambient_dim, doc.points.size());
    std::vector<std::string> warnings;
    Polytope p = parse_polytope(text, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << path << ": " << w << "\n";
    return p;
}

std::vector<SupportSet> load_supports(const std::vector<std::string>& paths) {
    std::vector<SupportSet> out;
    for (const auto& path : paths) {
        auto doc = load_points(path);
        try {
            out.emplace_back(doc.points);
        } catch (const DomainError& e) {
            throw ValidationError(path + ": " + e.what());
        }
    }
    return out;
}

class Cli {
public:
    Cli() : app_("Exact computations on lattice polytopes, free sums, mixed volumes and BKK bounds") {
        app_.require_subcommand(1);
        app_.fallthrough();
        app_.add_option("--output", settings_.output, "Output format")
            ->check(CLI::IsMember({"json", "pretty"}));
        app_.add_option("--seed", settings_.seed, "Seed for every random choice");
        app_.add_option("--trials", settings_.trials, "Number of self-test trials")->check(CLI::PositiveNumber);
        app_.add_option("--max-points", settings_.max_points, "Lattice-point budget per dilate count");

        unary("volume", "Euclidean and normalized volume", [this](const Polytope& p) {
            return json{{"vol", to_string(euclidean_volume(p))}, {"normalized_vol", to_string(normalized_volume(p))}};
        });
        unary("ehrhart", "Ehrhart polynomial, validated at m = d+1..2d, and h*-vector", [this](const Polytope& p) {
            auto data = ehrhart_data(p, settings_.max_points);
            validate_ehrhart_polynomial(p, data, settings_.max_points);
            return to_json(data);
        });
        unary("hstar", "h*-vector and Ehrhart polynomial from counts at m = 0..d", [this](const Polytope& p) {
            return to_json(ehrhart_data(p, settings_.max_points));
        });
        unary("dual", "Polar dual (origin must be interior)", [](const Polytope& p) {
            return polytope_json(polar_dual(p));
        });
        unary("reflexive", "Reflexivity test for origin-centred lattice polytopes", [](const Polytope& p) {
            return json{{"reflexive", is_reflexive(p)}};
        });
        binary("freesum", "conv{(P,0) u (0,Q)}", [](const Polytope& p, const Polytope& q) {
            auto fs = free_sum(p, q);
            auto j = polytope_json(fs.polytope);
            j["free_sum"] = fs.is_free_sum;
            return j;
        });
        binary("verify-product", "Check Vol(P+Q) = Vol(P) Vol(Q) for the free sum", [](const Polytope& p,
                                                                                       const Polytope& q) {
            return to_json(verify_product_formula(p, q));
        });
        binary("braun", "Compare h*(P+Q) with h*(P) h*(Q)", [this](const Polytope& p, const Polytope& q) {
            return to_json(braun_check(p, q, settings_.max_points));
        });
        binary("bkk-export", "Export the seeded free-sum Laurent system", [this](const Polytope& p,
                                                                               const Polytope& q) {
            return to_json(build_free_sum_system(p, q, settings_.seed));
        });

        auto* mink = app_.add_subcommand("minksum", "Minkowski sum A + B");
        mink->add_option("files", files_, "Two point documents")->required()->expected(2);
        mink->callback([this] {
            auto a = load_points(files_[0]);
            auto b = load_points(files_[1]);
            emit(points_json(a.ambient_dim, minkowski_sum(a.points, b.points)));
        });

        auto* mixed = app_.add_subcommand("mixedvol", "Mixed volume of n point sets in R^n");
        mixed->add_option("files", files_, "n point documents")->required();
        mixed->callback([this] {
            std::vector<PointSet> sets;
            for (const auto& f : files_) sets.push_back(load_points(f).points);
            emit(json{{"mixed_volume", to_string(mixed_volume(sets))}});
        });

        auto* check = app_.add_subcommand("check-conditions", "Classify faces of conv(S1 u ... u Sk) by A/B/C");
        check->add_option("files", files_, "Support documents")->required();
        check->callback([this] { emit(to_json(check_face_conditions(load_supports(files_)))); });

        auto* cert = app_.add_subcommand("certify", "Face certificate plus MV and Vol of the union");
        cert->add_option("files", files_, "n support documents in Z^n")->required();
        cert->callback([this] { emit(to_json(certify_mv_equals_vol(load_supports(files_)))); });

        auto* gen = app_.add_subcommand("gen-random", "Seeded random lattice polytope containing the origin");
        gen->add_option("--dim", spec_.ambient_dim, "Ambient dimension (1..4)");
        gen->add_option("--points", spec_.num_points, "Number of random points (3..16)");
        gen->add_option("--bound", spec_.coordinate_bound, "Coordinate bound (1..6)");
        gen->add_option("--origin-mode", origin_mode_, "interior | boundary | vertex | any-containing")
            ->check(CLI::IsMember({"interior", "boundary", "vertex", "any-containing"}));
        gen->callback([this] {
            spec_.seed = settings_.seed;
            spec_.origin_mode = *parse_origin_mode(origin_mode_);
            auto j = polytope_json(gen_random(spec_));
            j["seed"] = spec_.seed;
            j["origin_mode"] = origin_mode_;
            emit(j);
        });

        auto* self = app_.add_subcommand("selftest", "Randomized invariant suites for every module");
        self->add_flag("--inject-fault", inject_fault_)->group("");
        self->callback([this] {
            HarnessOptions opts;
            opts.trials = settings_.trials;
            opts.seed = settings_.seed;
            opts.inject_fault = inject_fault_;
            auto summary = run_selftest(opts);
            json suites = json::array();
            for (const auto& s : summary.suites) {
                suites.push_back(json{{"name", s.name}, {"passed", s.passed}, {"failed", s.failed},
                                      {"failures", s.failures}});
                for (const auto& f : s.failures) std::cerr << "FAIL " << s.name << ": " << f << "\n";
            }
            emit(json{{"seed", summary.seed}, {"trials", summary.trials}, {"suites", std::move(suites)},
                      {"ok", summary.ok()}});
            std::cerr << "selftest: " << summary.trials << " trial(s) in " << summary.seconds << " s\n";
            if (!summary.ok()) status_ = kInternal;
        });
    }

    int run(int argc, char** argv) {
        try {
            app_.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            return app_.exit(e);
        } catch (const CLI::ParseError& e) {
            app_.exit(e);
            return kParse;
        } catch (const ParseError& e) {
            return fail(kParse, e.what());
        } catch (const ValidationError& e) {
            return fail(kValidation, e.what());
        } catch (const InternalConsistencyError& e) {
            return fail(kInternal, e.what());
        } catch (const Error& e) {
            return fail(kPrecondition, e.what());
        }
        return status_;
    }

private:
    template <typename F>
    void unary(const std::string& name, const std::string& help, F body) {
        auto* sub = app_.add_subcommand(name, help);
        sub->add_option("file", files_, "Polytope document, or - for stdin")->required()->expected(1);
        sub->callback([this, body] { emit(body(load_polytope(files_[0]))); });
    }

    template <typename F>
    void binary(const std::string& name, const std::string& help, F body) {
        auto* sub = app_.add_subcommand(name, help);
        sub->add_option("files", files_, "Polytope documents P and Q")->required()->expected(2);
        sub->callback([this, body] { emit(body(load_polytope(files_[0]), load_polytope(files_[1]))); });
    }

    void emit(const json& j) const { std::cout << dump(j, settings_.output == "pretty") << "\n"; }

    static int fail(int code, const std::string& message) {
        std::cerr << "error: " << message << "\n";
        return code;
    }

    CLI::App app_;
    Settings settings_;
    std::vector<std::string> files_;
    RandomInstanceSpec spec_;
    std::string origin_mode_ = "any-containing";
    bool inject_fault_ = false;
    int status_ = kOk;
};

}  // namespace

int main(int argc, char** argv) {
    Cli cli;
    return cli.run(argc, argv);
}
