#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "weylfilt/alcove.hpp"
#include "weylfilt/lcf.hpp"
#include "weylfilt/modular.hpp"
#include "weylfilt/report_io.hpp"

namespace wf = weylfilt;

namespace {

wf::Weight parse_weight(const std::string& s, int rank) {
  std::vector<wf::Int> coords;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      coords.push_back(std::stoll(part));
    } catch (const std::exception&) {
      throw wf::DomainError("cannot parse weight coordinate '" + part + "' in '" + s + "'");
    }
  }
  if (static_cast<int>(coords.size()) != rank)
    throw wf::DomainError("weight '" + s + "' has " + std::to_string(coords.size()) +
                          " coordinates, expected " + std::to_string(rank));
  return wf::Weight(coords);
}

std::vector<int> parse_word(const std::string& s, int rank) {
  std::vector<int> word;
  if (s.empty() || s == "e") return word;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) {
    int idx;
    try {
      idx = std::stoi(part);
    } catch (const std::exception&) {
      throw wf::DomainError("cannot parse wall index '" + part + "' in word '" + s + "'");
    }
    if (idx < 0 || idx > rank)
      throw wf::DomainError("wall index " + std::to_string(idx) + " out of range 0.." + std::to_string(rank));
    word.push_back(idx);
  }
  return word;
}

bool is_prime(wf::Int p) {
  if (p < 2) return false;
  for (wf::Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string kl_cache_path(const std::string& dir, const wf::CartanType& t) {
  return dir + "/kl_" + t.name() + "~.json";
}

struct Emitter {
  std::string format;  // json | csv | text
  void json_out(const wf::Json& j) const { std::cout << j.dump(2) << '\n'; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weylfilt: exact character arithmetic for Weyl modules in positive characteristic"};
  app.require_subcommand(1);

  std::string type_name;
  wf::Int p = 0;
  std::string format = "json";
  std::string cache_dir;
  if (const char* env = std::getenv("WEYLFILT_CACHE_DIR")) cache_dir = env;
  wf::Int interval_cap = 20000;
  int jobs = 1;
  bool strict = false;

  app.add_option("--type", type_name, "Cartan type, e.g. A1, A2, B2, G2")->required();
  app.add_option("--p", p, "characteristic (prime)");
  app.add_option("--format", format, "output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache-dir", cache_dir, "directory for the persistent KL cache (env WEYLFILT_CACHE_DIR)");
  app.add_option("--interval-cap", interval_cap, "Bruhat interval size cap");
  app.add_option("--jobs", jobs, "worker threads for batch");
  app.add_flag("--strict", strict, "require p >= 2h-2 instead of only flagging it");

  auto* cmd_roots = app.add_subcommand("roots", "root system facts");
  auto* cmd_weylchar = app.add_subcommand("weylchar", "Weyl character and dimension");
  auto* cmd_klpoly = app.add_subcommand("klpoly", "Kazhdan-Lusztig polynomial for word-specified elements");
  auto* cmd_lcf = app.add_subcommand("lcf", "chi_KL expansion");
  auto* cmd_pfilt = app.add_subcommand("pfilt", "Delta^red decomposition report per lambda");
  auto* cmd_batch = app.add_subcommand("batch", "decompose every dominant lambda below a bound");
  auto* cmd_g1 = app.add_subcommand("g1", "baby Verma / Q^_1 / socle-bound checks");

  std::vector<std::string> lambda_args;
  cmd_weylchar->add_option("--lambda", lambda_args, "weight, comma-separated fundamental coordinates");
  cmd_lcf->add_option("--lambda", lambda_args, "weight");
  cmd_pfilt->add_option("--lambda", lambda_args, "weight");
  bool delta_p_labels = false;
  cmd_pfilt->add_flag("--delta-p-labels", delta_p_labels,
                      "label sections as Delta^p instead of Delta^red (equal under the assumed LCF)");

  std::string y_word, x_word;
  cmd_klpoly->add_option("--y", y_word, "reduced word for y (wall indices, e.g. 0,1,2; 'e' for identity)");
  cmd_klpoly->add_option("--x", x_word, "reduced word for x")->required();

  wf::Int bound = 0;
  cmd_batch->add_option("--bound", bound, "upper bound on <lambda+rho, alpha0^vee>")->required();

  std::string baby_arg, q1_arg, socle_arg;
  cmd_g1->add_option("--baby-verma", baby_arg, "weight mu for ch Z^_1(mu) and its constituents");
  cmd_g1->add_option("--q1hat", q1_arg, "restricted weight for ch Q^_1");
  cmd_g1->add_option("--check-socle", socle_arg, "dominant weight for the socle-bound check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    wf::DomainError err(std::string("argument error: ") + e.what());
    std::cerr << wf::error_json(err).dump(2) << '\n';
    return wf::exit_code(err);
  }

  Emitter emit{format};

  try {
    wf::CartanType type = wf::CartanType::parse(type_name);
    wf::RootSystem probe = wf::RootSystem::build(type);
    const int rank = probe.rank();
    const wf::Int h = probe.coxeter_number();

    if (cmd_roots->parsed()) {
      if (format == "json" || format == "csv") {
        wf::Json j;
        j["cartan_type"] = type.name();
        j["rank"] = rank;
        j["coxeter_number"] = h;
        j["num_positive_roots"] = probe.num_positive_roots();
        j["cartan_matrix"] = probe.cartan();
        j["cartan_determinant"] = probe.cartan_det();
        j["rho"] = wf::weight_json(probe.rho());
        j["highest_short_root"] = probe.highest_short_root().root_coords;
        j["highest_short_coroot"] = probe.highest_short_root().coroot_coords;
        j["w0_matrix"] = probe.w0_matrix();
        wf::Json roots = wf::Json::array();
        for (const auto& r : probe.positive_roots()) {
          wf::Json e;
          e["root"] = r.root_coords;
          e["coroot"] = r.coroot_coords;
          e["weight"] = r.weight_coords;
          e["length2"] = r.length2;
          roots.push_back(std::move(e));
        }
        j["positive_roots"] = std::move(roots);
        emit.json_out(j);
      } else {
        std::cout << type.name() << ": rank " << rank << ", " << probe.num_positive_roots()
                  << " positive roots, Coxeter number " << h << '\n';
      }
      return 0;
    }

    // every other command needs p
    if (p == 0) throw wf::DomainError("--p is required for this command");
    if (!is_prime(p)) throw wf::DomainError("p = " + std::to_string(p) + " is not prime");

    wf::EngineConfig cfg;
    cfg.interval_cap = interval_cap;
    wf::Engine eng(type, p, cfg);

    bool have_cache = !cache_dir.empty();
    std::string cache_file = have_cache ? kl_cache_path(cache_dir, type) : "";
    if (have_cache && std::filesystem::exists(cache_file)) eng.kl().load_json(cache_file);

    auto require_p_ge_h = [&] {
      if (p < h)
        throw wf::DomainError("this command needs p >= h (p = " + std::to_string(p) + ", h = " +
                              std::to_string(h) + ")");
    };
    auto require_strict = [&] {
      if (strict && p < 2 * h - 2)
        throw wf::DomainError("--strict requires p >= 2h-2 (p = " + std::to_string(p) + ", 2h-2 = " +
                              std::to_string(2 * h - 2) + ")");
    };

    if (cmd_weylchar->parsed()) {
      if (lambda_args.empty()) throw wf::DomainError("weylchar needs at least one --lambda");
      wf::Json out = wf::Json::array();
      for (const std::string& ls : lambda_args) {
        wf::Weight lambda = parse_weight(ls, rank);
        const wf::FormalCharacter& c = eng.weyl_character(lambda);
        if (format == "text") {
          std::cout << "lambda " << lambda.to_string() << ": dimension " << wf::weyl_dimension(probe, lambda)
                    << '\n'
                    << c.to_text() << '\n';
        } else {
          wf::Json j;
          j["lambda"] = wf::weight_json(lambda);
          j["dimension"] = wf::weyl_dimension(probe, lambda);
          j["character"] = wf::character_json(c);
          out.push_back(std::move(j));
        }
      }
      if (format != "text") emit.json_out(out);
    } else if (cmd_klpoly->parsed()) {
      wf::AffineElement y = wf::from_word(probe, parse_word(y_word, rank));
      wf::AffineElement x = wf::from_word(probe, parse_word(x_word, rank));
      wf::KLPolynomial poly = eng.kl().polynomial(y, x);
      wf::Json j;
      j["coxeter_type"] = eng.kl().coxeter_label();
      j["y"] = wf::reduced_word(probe, y);
      j["x"] = wf::reduced_word(probe, x);
      j["length_y"] = wf::length(probe, y);
      j["length_x"] = wf::length(probe, x);
      j["coeffs"] = poly.coeffs;
      j["value_at_one"] = wf::evaluate_at_one(poly);
      if (format == "text") {
        std::cout << "P_{y,x} coeffs:";
        for (wf::Int c : poly.coeffs) std::cout << ' ' << c;
        std::cout << " (value at 1: " << wf::evaluate_at_one(poly) << ")\n";
      } else {
        emit.json_out(j);
      }
    } else if (cmd_lcf->parsed()) {
      require_p_ge_h();
      if (lambda_args.empty()) throw wf::DomainError("lcf needs at least one --lambda");
      wf::Json out = wf::Json::array();
      for (const std::string& ls : lambda_args) {
        wf::Weight lambda = parse_weight(ls, rank);
        const wf::ChiCombination& chi = eng.chi_kl(lambda);
        if (format == "text") {
          std::cout << "chi_KL(" << lambda.to_string() << "):";
          for (const auto& t : chi) std::cout << ' ' << t.coeff << "*chi(" << t.weight.to_string() << ")";
          std::cout << '\n';
        } else {
          wf::Json j;
          j["lambda"] = wf::weight_json(lambda);
          j["regular"] = wf::is_regular(probe, lambda, p);
          j["chi_kl"] = wf::chi_json(chi);
          out.push_back(std::move(j));
        }
      }
      if (format != "text") emit.json_out(out);
    } else if (cmd_pfilt->parsed()) {
      require_p_ge_h();
      require_strict();
      if (lambda_args.empty()) throw wf::DomainError("pfilt needs at least one --lambda");
      wf::Json out = wf::Json::array();
      bool first_csv = true;
      const char* label = delta_p_labels ? "Delta^p" : "Delta^red";
      if (delta_p_labels && format == "text")
        std::cout << "# Delta^p labels assume the LCF, under which Delta^red(mu) = Delta^p(mu)\n";
      for (const std::string& ls : lambda_args) {
        wf::Weight lambda = parse_weight(ls, rank);
        wf::FiltrationReport rep = wf::decompose_weyl(eng, lambda);
        if (format == "csv") {
          std::cout << wf::report_csv(rep, first_csv);
          first_csv = false;
        } else if (format == "text") {
          std::cout << "Delta(" << lambda.to_string() << ") =";
          for (const auto& s : rep.sections)
            std::cout << ' ' << s.multiplicity << "*" << label << "(" << s.mu.to_string() << ")";
          std::cout << (rep.nonnegative ? "  [nonnegative]" : "  [NEGATIVE MULTIPLICITY]") << '\n';
        } else {
          out.push_back(wf::report_json(rep));
        }
      }
      if (format == "json") emit.json_out(out);
    } else if (cmd_batch->parsed()) {
      require_p_ge_h();
      require_strict();
      wf::BatchSummary s = wf::batch_verify(eng, bound, jobs);
      if (format == "csv") {
        std::cout << wf::batch_csv(s);
      } else if (format == "text") {
        std::cout << "batch " << type.name() << " p=" << p << " bound=" << bound << ": " << s.total
                  << " weights, " << s.nonnegative_count << " nonnegative, " << s.error_count << " errors\n";
      } else {
        emit.json_out(wf::batch_json(s));
      }
    } else if (cmd_g1->parsed()) {
      require_strict();
      int chosen = (!baby_arg.empty()) + (!q1_arg.empty()) + (!socle_arg.empty());
      if (chosen != 1) throw wf::DomainError("g1 needs exactly one of --baby-verma, --q1hat, --check-socle");
      if (!baby_arg.empty()) {
        wf::Weight mu = parse_weight(baby_arg, rank);
        wf::FormalCharacter c = wf::baby_verma_char(probe, mu, p);
        auto constituents = wf::decompose_g1t(eng, c);
        wf::Json j;
        j["mu"] = wf::weight_json(mu);
        j["mass"] = c.mass();
        j["character"] = wf::character_json(c);
        wf::Json cs = wf::Json::array();
        for (const auto& [w, m] : constituents) {
          wf::Json e;
          e["weight"] = wf::weight_json(w);
          e["mult"] = m;
          cs.push_back(std::move(e));
        }
        j["constituents"] = std::move(cs);
        if (format == "text")
          std::cout << "ch Z^_1(" << mu.to_string() << "): mass " << c.mass() << ", " << constituents.size()
                    << " constituents\n";
        else
          emit.json_out(j);
      } else if (!q1_arg.empty()) {
        require_p_ge_h();
        wf::Weight l0 = parse_weight(q1_arg, rank);
        const wf::FormalCharacter& c = eng.q1_hat_character(l0);
        wf::Json j;
        j["lambda0"] = wf::weight_json(l0);
        j["mass"] = c.mass();
        j["p_ge_2h_minus_2"] = eng.p_ge_2h_minus_2();
        j["character"] = wf::character_json(c);
        if (format == "text")
          std::cout << "ch Q^_1(" << l0.to_string() << "): mass " << c.mass() << '\n';
        else
          emit.json_out(j);
      } else {
        require_p_ge_h();
        wf::Weight mu = parse_weight(socle_arg, rank);
        bool holds = wf::check_socle_bound(eng, mu);
        wf::Json j;
        j["mu"] = wf::weight_json(mu);
        j["p_ge_2h_minus_2"] = eng.p_ge_2h_minus_2();
        j["holds"] = holds;
        if (format == "text")
          std::cout << "socle bound at " << mu.to_string() << ": " << (holds ? "holds" : "FAILS") << '\n';
        else
          emit.json_out(j);
      }
    }

    if (have_cache) {
      std::filesystem::create_directories(cache_dir);
      eng.kl().save_json(cache_file);
    }
    return 0;
  } catch (const wf::Error& e) {
    std::cerr << wf::error_json(e).dump(2) << '\n';
    return wf::exit_code(e);
  } catch (const std::exception& e) {
    wf::ConsistencyError err(std::string("unexpected failure: ") + e.what());
    std::cerr << wf::error_json(err).dump(2) << '\n';
    return wf::exit_code(err);
  }
}
