// Command line front end for the fusion / W-algebra toolkit.

#include "wfusion/fusion.hpp"
#include "wfusion/json_io.hpp"
#include "wfusion/levelrank.hpp"
#include "wfusion/qchar.hpp"
#include "wfusion/sicoh.hpp"
#include "wfusion/verify.hpp"
#include "wfusion/walg.hpp"

#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace wfusion;
using json_io::json;

int parse_algebra(const std::string& s)
{
    if (s.size() < 3 || s.substr(0, 2) != "sl")
        throw CLI::ValidationError("--algebra", "expected sl<r>, e.g. sl3");
    int r = std::atoi(s.c_str() + 2);
    if (r < 1)
        throw CLI::ValidationError("--algebra", "rank must be positive");
    return r;
}

rootdata::AffineWeight parse_weight(const std::string& s)
{
    std::vector<long> labels;
    std::string cur;
    for (char c : std::string(s + ",")) {
        if (c == ',') {
            if (cur.empty())
                throw CLI::ValidationError("--lambda", "expected comma separated labels");
            labels.push_back(std::atol(cur.c_str()));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return rootdata::AffineWeight{labels};
}

Rat parse_rat_arg(const std::string& s, const char* name)
{
    auto v = parse_rational(s);
    if (!v)
        throw CLI::ValidationError(name, "expected a rational p/q");
    return *v;
}

void emit(const json& j)
{
    std::cout << j.dump(2) << "\n";
}

std::string smatrix_json(const std::vector<std::vector<std::complex<double>>>& S)
{
    json rows = json::array();
    for (const auto& row : S) {
        json r = json::array();
        for (const auto& z : row) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.12g", z.real());
            std::string re = buf;
            std::snprintf(buf, sizeof buf, "%.12g", z.imag());
            std::string im = buf;
            r.push_back(json::array({re, im}));
        }
        rows.push_back(r);
    }
    return rows.dump(2);
}

walg::Family parse_family(const std::string& s)
{
    if (s == "sb")
        return walg::Family::Subregular;
    if (s == "spr")
        return walg::Family::PrincipalSuper;
    throw CLI::ValidationError("--family", "expected sb or spr");
}

int run(int argc, char** argv)
{
    CLI::App app{"exact fusion rings, modular data and characters of "
                 "subregular W-algebras and principal W-superalgebras"};
    app.require_subcommand(1);

    // ------------------------------------------------------------ weights
    auto* cw = app.add_subcommand("weights", "list level-n dominant weights");
    std::string algebra;
    long level = 0;
    cw->add_option("--algebra", algebra, "affine algebra, sl<r>")->required();
    cw->add_option("--level", level, "level n >= 0")->required();
    cw->callback([&] {
        int r = parse_algebra(algebra);
        auto ws = rootdata::dominant_weights(r, level);
        std::sort(ws.begin(), ws.end());
        json out = json::array();
        for (const auto& w : ws) {
            json e;
            e["labels"] = json_io::weight_to_json(w);
            e["pi_pq"] = rootdata::pi_pq(w);
            e["h_affine"] = rat_str(rootdata::conformal_dim_affine(w, level));
            out.push_back(e);
        }
        emit(out);
    });

    // ------------------------------------------------------------ fusion
    auto* cf = app.add_subcommand("fusion", "affine fusion rings");
    cf->require_subcommand(1);
    auto* cfd = cf->add_subcommand("dump", "structure constants of L_n(sl_r)");
    std::string falgebra, fformat = "json";
    long flevel = 0;
    cfd->add_option("--algebra", falgebra, "affine algebra, sl<r>")->required();
    cfd->add_option("--level", flevel, "level n >= 0")->required();
    cfd->add_option("--format", fformat, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cfd->callback([&] {
        int r = parse_algebra(falgebra);
        std::string cached;
        std::filesystem::path cache_file;
        if (const char* dir = std::getenv("WFUSION_CACHE_DIR"); dir && fformat == "json") {
            cache_file = std::filesystem::path(dir) /
                         ("fusion_sl" + std::to_string(r) + "_" + std::to_string(flevel) +
                          ".json");
            if (std::ifstream in{cache_file}; in) {
                std::cout << std::string(std::istreambuf_iterator<char>(in), {});
                return;
            }
        }
        auto ring = walg::affine_fusion_ring(r, flevel, false);
        if (fformat == "csv") {
            std::cout << json_io::ring_to_csv(ring);
            return;
        }
        std::string text = json_io::ring_to_json(ring).dump(2) + "\n";
        if (!cache_file.empty()) {
            std::filesystem::create_directories(cache_file.parent_path());
            std::ofstream(cache_file) << text;
        }
        std::cout << text;
    });

    // ------------------------------------------------------------ walg
    auto* cwa = app.add_subcommand("walg", "rational W-(super)algebra data");
    cwa->require_subcommand(1);
    std::string wfam = "sb", wlambda;
    long wn = 0, wa = 0, wxi = 0;
    int wr = 0;
    bool have_xi = false;
    for (const char* sub : {"irr", "fusion", "smatrix", "hrelmap", "verify"}) {
        auto* c = cwa->add_subcommand(sub);
        c->add_option("--family", wfam, "sb or spr")->required();
        c->add_option("--n", wn, "parameter n")->required();
        c->add_option("--r", wr, "parameter r")->required();
        if (std::string(sub) == "hrelmap") {
            c->add_option("--lambda", wlambda, "weight labels a0,a1,...")->required();
            c->add_option("--a", wa, "coset label");
            c->add_option("--xi", wxi, "integer twist residue")
                ->each([&](const std::string&) { have_xi = true; });
        }
    }
    cwa->callback([&] {
        auto fam = parse_family(wfam);
        auto model = walg::make_model(fam, wn, wr);
        auto* sc = cwa->get_subcommands().front();
        const std::string name = sc->get_name();
        if (name == "irr") {
            auto wr_ = walg::fusion_ring(model);
            json out = json::array();
            for (std::size_t i = 0; i < wr_.basis.size(); ++i) {
                json e = json_io::wlabel_to_json(wr_.basis[i]);
                e["h_mod1"] = rat_str(mod1(wr_.ring.h[i]));
                out.push_back(e);
            }
            json top;
            top["family"] = wfam;
            top["n"] = wn;
            top["r"] = wr;
            top["count"] = out.size();
            top["central_charge"] = rat_str(model.central_charge);
            top["modules"] = out;
            emit(top);
        } else if (name == "fusion") {
            emit(json_io::ring_to_json(walg::fusion_ring(model).ring));
        } else if (name == "smatrix") {
            std::cout << smatrix_json(walg::smatrix(walg::fusion_ring(model))) << "\n";
        } else if (name == "hrelmap") {
            walg::WLabel x{parse_weight(wlambda), wa};
            auto img = fam == walg::Family::Subregular
                           ? walg::hrel_plus(wn, wr, x, wxi)
                           : walg::hrel_minus(wn, wr, x, wxi);
            json out;
            out["input"] = json_io::wlabel_to_json(x);
            out["xi"] = wxi;
            out["image"] = img ? json_io::wlabel_to_json(*img) : json(nullptr);
            emit(out);
        } else { // verify
            auto wr_ = walg::fusion_ring(model);
            wr_.ring.check_consistency();
            auto S = walg::smatrix(wr_);
            const int B = static_cast<int>(S.size());
            double dev = 0;
            for (int i = 0; i < B; ++i)
                for (int j = 0; j < B; ++j) {
                    std::complex<double> acc = 0;
                    for (int k = 0; k < B; ++k)
                        acc += S[i][k] * std::conj(S[j][k]);
                    dev = std::max(dev, std::abs(acc - (i == j ? 1.0 : 0.0)));
                }
            json out;
            out["count"] = wr_.basis.size();
            out["associative"] = true;
            out["smatrix_unitarity_dev"] = dev;
            emit(out);
            if (dev > 1e-10)
                throw std::runtime_error("S-matrix unitarity check failed");
        }
    });

    // ------------------------------------------------------------ levelrank
    auto* clr = app.add_subcommand("levelrank", "level-rank duality checks");
    clr->require_subcommand(1);
    auto* clrv = clr->add_subcommand("verify");
    long lrn = 0, lrm = 0;
    clrv->add_option("--n", lrn, "level of the sl_m side")->required();
    clrv->add_option("--m", lrm, "rank of the extended side")->required();
    clrv->callback([&] {
        levelrank::verify_duality(lrn, lrm);
        long pairs = levelrank::branching_label_check(lrn, lrm);
        json out;
        out["n"] = lrn;
        out["m"] = lrm;
        out["isomorphism"] = true;
        out["branching_pairs"] = pairs;
        emit(out);
    });

    // ------------------------------------------------------------ char
    auto* cc = app.add_subcommand("char", "graded characters");
    std::string cfam, clambda;
    long cn = 0, ca = 0, corder = 8;
    cc->add_option("--family", cfam, "sb, spr or prinW")->required();
    cc->add_option("--n", cn, "parameter n")->required();
    cc->add_option("--lambda", clambda, "weight labels a0,a1,...")->required();
    cc->add_option("--a", ca, "coset label (sb and spr)");
    cc->add_option("--order", corder, "relative truncation order");
    cc->callback([&] {
        auto lam = parse_weight(clambda);
        qchar::QSeries s;
        if (cfam == "prinW")
            s = qchar::char_prinw(lam, cn, corder);
        else if (cfam == "sb")
            s = qchar::char_sb(lam, ca, cn, corder);
        else if (cfam == "spr")
            s = qchar::char_spr(lam, ca, cn, corder);
        else
            throw CLI::ValidationError("--family", "expected sb, spr or prinW");
        emit(json_io::series_to_json(s));
    });

    // ------------------------------------------------------------ sicoh
    auto* cs = app.add_subcommand("sicoh", "relative semi-infinite cohomology");
    std::string slam = "0", smu = "0", snorm = "1";
    long smax = 4;
    cs->add_option("--lambda", slam, "B^+ highest weight, rational");
    cs->add_option("--mu", smu, "B^- highest weight, rational");
    cs->add_option("--norm", snorm, "Heisenberg norm b, rational");
    cs->add_option("--maxweight", smax, "largest conformal weight checked");
    cs->callback([&] {
        Rat lam = parse_rat_arg(slam, "--lambda");
        Rat mu = parse_rat_arg(smu, "--mu");
        Rat b = parse_rat_arg(snorm, "--norm");
        if (b == 0)
            throw CLI::ValidationError("--norm", "norm must be nonzero");
        json out;
        out["lambda"] = rat_str(lam);
        out["mu"] = rat_str(mu);
        out["norm"] = rat_str(b);
        json blocks = json::array();
        for (long w = 0; w <= smax; ++w) {
            auto h = sicoh::rel_cohomology(lam, mu, b, w);
            json e;
            e["weight"] = w;
            json dims = json::object();
            for (const auto& [p, d] : h)
                dims[std::to_string(p)] = d;
            e["cohomology"] = dims;
            blocks.push_back(e);
        }
        out["blocks"] = blocks;
        emit(out);
    });

    // ------------------------------------------------------------ verify
    auto* cv = app.add_subcommand("verify", "run the acceptance checks");
    std::string suite = "all";
    bool quick = false;
    cv->add_option("--suite", suite, "all, or a criterion id 1..10");
    cv->add_flag("--quick", quick, "reduced truncation orders and grids");
    cv->callback([&] {
        auto results = wfusion::verify::run_all(quick);
        bool all_pass = true;
        for (const auto& res : results) {
            if (suite != "all" && suite != std::to_string(res.id))
                continue;
            std::cout << (res.pass ? "PASS" : "FAIL") << " [" << res.id << "] "
                      << res.name << ": " << res.detail << "\n";
            all_pass = all_pass && res.pass;
        }
        if (!all_pass)
            throw std::runtime_error("verification failed");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const walg::ValidationError& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    return run(argc, argv);
}
