#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "haarwell/channel.hpp"
#include "haarwell/errors.hpp"
#include "haarwell/integrate.hpp"
#include "haarwell/montecarlo.hpp"
#include "haarwell/weingarten.hpp"

namespace hw = haarwell;

namespace {

// 0 ok, 1 usage, 2 cap, 3 pole, 4 a requested check failed
constexpr int kExitUsage = 1;
constexpr int kExitCap = 2;
constexpr int kExitPole = 3;
constexpr int kExitCheckFailed = 4;

std::optional<std::string> cache_dir() {
  if (const char* env = std::getenv("HAARWELL_CACHE")) {
    std::string s = env;
    if (s.empty()) return std::nullopt;  // explicit opt-out
    return s;
  }
  if (const char* home = std::getenv("HOME"))
    return std::string(home) + "/.cache/haarwell";
  return std::nullopt;
}

template <typename Builder>
hw::WeingartenTable cached_table(hw::GroupKind g, int k, const hw::TableMode& mode,
                                 bool use_cache, Builder build) {
  const auto dir = use_cache ? cache_dir() : std::nullopt;
  if (!dir) return build();
  const std::string path = *dir + "/" + hw::table_cache_filename(g, k, mode);
  if (std::filesystem::exists(path)) {
    try {
      return hw::load_table(path);
    } catch (const hw::CacheError& e) {
      std::cerr << "warning: rebuilding cache entry (" << e.what() << ")\n";
    }
  }
  hw::WeingartenTable t = build();
  std::error_code ec;
  std::filesystem::create_directories(*dir, ec);
  if (!ec) {
    try {
      hw::save_table(t, path);
    } catch (const hw::CacheError& e) {
      std::cerr << "warning: could not save cache entry (" << e.what() << ")\n";
    }
  }
  return t;
}

// Accepts "1/2" as well as decimal notation like "0.5".
hw::BigRational parse_ratio(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return hw::BigRational::from_string(text);
  const std::string frac = text.substr(dot + 1);
  hw::BigRational scale(1);
  for (size_t i = 0; i < frac.size(); ++i) scale = scale * hw::BigRational(10);
  return hw::BigRational::from_string(text.substr(0, dot) + frac) / scale;
}

hw::TableMode resolve_mode(bool symbolic, const std::string& n_text) {
  if (symbolic == !n_text.empty())
    throw std::invalid_argument("choose exactly one of --symbolic and --n <value>");
  if (symbolic) return hw::TableMode::symbolic();
  return hw::TableMode::at(hw::BigRational::from_string(n_text));
}

struct SeriesCheck {
  int order = 0;           // truncation order actually used
  hw::BigRational value;   // truncated sum at n0
  hw::BigRational bound;   // next-coefficient remainder bound C n0^{-k-order-1}
};

// Truncation order is pulled back two steps from the last computed
// coefficient of the right parity so the remainder bound C n^{-k-l-1} keeps a
// full power of n of slack over the first omitted term.
SeriesCheck series_truncation_check(const hw::Permutation& sigma, int requested_order,
                                    const hw::BigRational& n0) {
  const int k = sigma.degree();
  const int parity = sigma.length() % 2;
  int last = requested_order;
  if (last % 2 != parity) --last;
  if (last - 2 < parity) throw std::invalid_argument("series order too small for this class");
  const auto counts = hw::wg_unitary_series(sigma, last, std::max(last, hw::kDefaultMaxOrder));
  SeriesCheck out;
  out.order = last - 2;
  std::vector<hw::BigInt> head(counts.begin(), counts.begin() + out.order + 1);
  out.value = hw::wg_series_truncation(head, k, n0);
  out.bound = hw::BigRational(counts[static_cast<size_t>(last)]) /
              hw::BigRational::pow(n0, k + out.order + 1);
  return out;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

int run_wg(const std::string& group_s, int k, const std::string& key, bool symbolic,
           const std::string& n_text, const std::vector<std::string>& methods,
           bool all_classes, bool json_out, bool no_cache) {
  const hw::GroupKind group = hw::group_from_name(group_s);
  const hw::TableMode mode = resolve_mode(symbolic, n_text);
  if (key.empty() && !all_classes)
    throw std::invalid_argument("give a class/pairing key or --all-classes");

  std::vector<std::string> wanted = methods;
  if (wanted.empty()) wanted.push_back("gram");
  if (group != hw::GroupKind::Unitary)
    for (const auto& m : wanted)
      if (m != "gram")
        throw std::invalid_argument("method '" + m + "' exists for the unitary group only");

  // the gram/standard table, possibly from cache
  const auto standard = [&] {
    switch (group) {
      case hw::GroupKind::Unitary:
        return hw::wg_unitary_gram(k, mode);
      case hw::GroupKind::Orthogonal:
        return hw::wg_orthogonal(k, mode);
      case hw::GroupKind::FreeOrthogonal:
        return hw::wg_free(k, mode);
    }
    throw std::logic_error("bad group");
  };
  bool need_table = false;
  for (const auto& m : wanted)
    if (m == "gram" || m.rfind("series:", 0) == 0) need_table = true;
  if (all_classes) need_table = true;
  std::optional<hw::WeingartenTable> table;
  if (need_table) table = cached_table(group, k, mode, !no_cache, standard);

  std::optional<hw::WeingartenTable> character;
  for (const auto& m : wanted)
    if (m == "character") character = hw::wg_unitary_character(k, mode);

  struct Line {
    std::string method;
    std::string value;
  };
  std::vector<Line> lines;
  bool cross_ok = true;
  std::string cross_note;

  if (all_classes) {
    const auto& src = table ? *table : *character;
    if (group == hw::GroupKind::FreeOrthogonal) {
      const auto& basis = src.pairing_basis();
      for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j)
          lines.push_back({basis[i].to_string() + "|" + basis[j].to_string(),
                           src.pairing_values()(static_cast<int>(i), static_cast<int>(j))
                               .to_string()});
    } else {
      for (const auto& [type, value] : src.class_values())
        lines.push_back({type.to_string(), value.to_string()});
    }
    if (character && table) {
      cross_ok = table->class_values() == character->class_values();
      cross_note = cross_ok ? "gram and character tables agree on every class"
                            : "gram and character tables differ";
    }
  } else {
    // resolve the key and print one value per requested method
    std::optional<hw::RationalFunction> gram_value, char_value;
    std::optional<hw::Permutation> sigma;
    if (group == hw::GroupKind::Unitary) {
      sigma = hw::Permutation::from_cycles(key, k);
      if (table) gram_value = table->value(*sigma);
      if (character) char_value = character->value(*sigma);
    } else {
      const size_t bar = key.find('|');
      if (bar == std::string::npos) {
        if (group != hw::GroupKind::Orthogonal)
          throw std::invalid_argument("free keys look like {1,2}{3,4}|{1,4}{2,3}");
        gram_value = table->value(hw::Partition::parse(key));
      } else {
        const auto pi = hw::PairPartition::parse(key.substr(0, bar), k);
        const auto rho = hw::PairPartition::parse(key.substr(bar + 1), k);
        gram_value = table->value(pi, rho);
      }
    }

    for (const auto& m : wanted) {
      if (m == "gram") {
        lines.push_back({"gram", gram_value->to_string()});
      } else if (m == "character") {
        lines.push_back({"character", char_value->to_string()});
      } else if (m.rfind("series:", 0) == 0) {
        if (mode.is_symbolic())
          throw std::invalid_argument("the series method needs a numeric --n");
        if (!sigma) throw std::invalid_argument("the series method is unitary-only");
        const int order = std::stoi(m.substr(7));
        const SeriesCheck sc = series_truncation_check(*sigma, order, mode.n0());
        lines.push_back({"series:" + std::to_string(sc.order),
                         sc.value.to_string() + " (remainder bound " +
                             sc.bound.to_string() + ")"});
        if (gram_value) {
          const hw::BigRational exact = gram_value->evaluate_at(mode.n0());
          const hw::BigRational err = (exact - sc.value).abs();
          if (!(err <= sc.bound)) {
            cross_ok = false;
            cross_note = "series truncation disagrees beyond its remainder bound";
          }
        }
      } else {
        throw std::invalid_argument("unknown method '" + m + "'");
      }
    }
    if (gram_value && char_value) {
      if (!(*gram_value == *char_value)) {
        cross_ok = false;
        cross_note = "gram and character values differ";
      } else if (cross_note.empty()) {
        cross_note = "gram and character values agree";
      }
    }
  }

  if (json_out) {
    std::string out = "{\"group\":\"" + hw::group_name(group) + "\",";
    out += "\"k\":" + std::to_string(k) + ",";
    out += "\"mode\":\"" + mode.to_string() + "\",";
    if (!key.empty()) out += "\"key\":\"" + json_escape(key) + "\",";
    out += "\"values\":{";
    for (size_t i = 0; i < lines.size(); ++i)
      out += "\"" + json_escape(lines[i].method) + "\":\"" + json_escape(lines[i].value) +
             "\"" + (i + 1 < lines.size() ? "," : "");
    out += "}";
    if (!cross_note.empty())
      out += ",\"cross_check\":\"" + std::string(cross_ok ? "ok" : "failed") + "\"";
    out += "}";
    std::cout << out << "\n";
  } else {
    const bool bare = lines.size() == 1 && cross_note.empty();
    for (const auto& l : lines) {
      if (bare)
        std::cout << l.value << "\n";
      else
        std::cout << l.method << (all_classes ? ": " : " = ") << l.value << "\n";
    }
    if (!cross_note.empty())
      std::cout << "cross-check: " << (cross_ok ? "OK" : "FAILED") << " (" << cross_note
                << ")\n";
  }
  return cross_ok ? 0 : kExitCheckFailed;
}

int run_integrate(const std::string& group_s, const std::string& monomial, bool symbolic,
                  const std::string& n_text, bool json_out) {
  hw::MomentQuery q;
  q.group = hw::group_from_name(group_s);
  q.factors = hw::parse_monomial(monomial);
  q.mode = resolve_mode(symbolic, n_text);
  const hw::RationalFunction v = hw::integrate(q);
  if (json_out) {
    std::cout << "{\"group\":\"" << hw::group_name(q.group) << "\",\"monomial\":\""
              << json_escape(hw::monomial_to_string(q.factors)) << "\",\"mode\":\""
              << q.mode.to_string() << "\",\"value\":\"" << json_escape(v.to_string())
              << "\"}\n";
  } else {
    std::cout << v.to_string() << "\n";
  }
  return 0;
}

int run_verify(const std::string& suite, int k, bool symbolic, const std::string& n_text,
               uint64_t seed, bool seed_given, uint64_t stream) {
  if (suite == "recursion") {
    const hw::TableMode mode =
        (symbolic || n_text.empty()) ? hw::TableMode::symbolic() : resolve_mode(false, n_text);
    const auto rep = hw::wg_unitary_recursion_check(k, mode);
    std::cout << "recursion k=" << k << " mode=" << mode.to_string() << ": checked "
              << rep.checked << ", violations " << rep.violations << " -> "
              << (rep.ok() ? "PASS" : "FAIL") << "\n";
    for (const auto& f : rep.failures) std::cout << "  violated at " << f << "\n";
    return rep.ok() ? 0 : kExitCheckFailed;
  }

  if (suite == "bounds") {
    const hw::TableMode mode = resolve_mode(symbolic, n_text);
    if (mode.is_symbolic()) throw std::invalid_argument("bounds needs a numeric --n");
    const auto table = hw::wg_unitary_gram(k, hw::TableMode::symbolic());
    const auto rep = hw::uniform_bound_check(table, mode.n0());
    std::cout << "bounds k=" << k << " n=" << mode.n0().to_string() << ":\n";
    for (const auto& row : rep.rows)
      std::cout << "  class " << row.type.to_string() << " ratio " << row.ratio.to_string()
                << " lower " << (row.lower_ok ? "ok" : "VIOLATED")
                << (row.upper_applicable ? (row.upper_ok ? " upper ok" : " upper VIOLATED")
                                         : " upper n/a")
                << "\n";
    std::cout << (rep.ok() ? "PASS" : "FAIL") << "\n";
    return rep.ok() ? 0 : kExitCheckFailed;
  }

  if (suite == "three-path") {
    const auto gram = hw::wg_unitary_gram(k, hw::TableMode::symbolic());
    const auto chr = hw::wg_unitary_character(k, hw::TableMode::symbolic());
    bool ok = gram.class_values() == chr.class_values();
    std::cout << "gram vs character (symbolic, all classes): " << (ok ? "agree" : "DIFFER")
              << "\n";
    const hw::BigRational n0 =
        n_text.empty() ? hw::BigRational(10) : hw::BigRational::from_string(n_text);
    for (const auto& [type, value] : gram.class_values()) {
      const auto sigma = hw::Permutation::from_cycle_type(type, k);
      const SeriesCheck sc = series_truncation_check(sigma, hw::kDefaultMaxOrder, n0);
      const hw::BigRational exact = value.evaluate_at(n0);
      const hw::BigRational err = (exact - sc.value).abs();
      const bool sok = err <= sc.bound;
      if (!sok) ok = false;
      std::cout << "  series class " << type.to_string() << " at n=" << n0.to_string()
                << ": |err| " << (sok ? "<=" : ">") << " bound\n";
    }
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : kExitCheckFailed;
  }

  if (suite.rfind("mc:", 0) == 0) {
    if (!seed_given) throw std::invalid_argument("mc suite needs --seed");
    const long samples = std::stol(suite.substr(3));
    const hw::TableMode mode = resolve_mode(false, n_text.empty() ? "10" : n_text);
    bool ok = true;
    int qi = 0;
    for (const auto group : {hw::GroupKind::Unitary, hw::GroupKind::Orthogonal}) {
      hw::MomentQuery q;
      q.group = group;
      q.mode = mode;
      for (int p = 1; p <= k; ++p) {
        q.factors.push_back({p, p, false});
        q.factors.push_back({p, p, group == hw::GroupKind::Unitary});
      }
      const auto est = hw::estimate_moment(q, samples, {seed, stream + qi++});
      std::cout << "  " << est.to_json() << "\n";
      if (est.z_score && *est.z_score > 5.0) ok = false;
    }
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : kExitCheckFailed;
  }

  throw std::invalid_argument("unknown suite '" + suite +
                              "'; expected recursion|bounds|three-path|mc:<samples>");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and Monte-Carlo moments of Haar measure on U(n), O(n), O(n)+"};
  app.require_subcommand(1);

  // wg
  auto* wg = app.add_subcommand("wg", "print Weingarten values");
  std::string wg_group, wg_key, wg_n;
  int wg_k = 0;
  bool wg_symbolic = false, wg_all = false, wg_json = false, wg_nocache = false;
  std::vector<std::string> wg_methods;
  wg->add_option("group", wg_group, "unitary | orthogonal | free")->required();
  wg->add_option("k", wg_k, "degree")->required();
  wg->add_option("key", wg_key,
                 "class: cycles like \"(1 2)\" (unitary), loop type like \"2,1\" or "
                 "\"{1,2}{3,4}|{1,4}{2,3}\" (orthogonal/free)");
  wg->add_flag("--symbolic", wg_symbolic, "values as rational functions of n");
  wg->add_option("--n", wg_n, "evaluate at this dimension (integer; rational for free)");
  wg->add_option("--method", wg_methods, "gram | character | series:<order>; repeat to cross-check");
  wg->add_flag("--all-classes", wg_all, "print the whole table");
  wg->add_flag("--json", wg_json, "machine-readable output");
  wg->add_flag("--no-cache", wg_nocache, "skip the table cache");

  // integrate
  auto* integ = app.add_subcommand("integrate", "exact Haar average of an entry monomial");
  std::string in_group, in_monomial, in_n;
  bool in_symbolic = false, in_json = false;
  integ->add_option("group", in_group, "unitary | orthogonal | free")->required();
  integ->add_option("monomial", in_monomial, "e.g. \"u[1,1] ~u[1,1]\"")->required();
  integ->add_flag("--symbolic", in_symbolic, "answer as a rational function of n");
  integ->add_option("--n", in_n, "evaluate at this dimension");
  integ->add_flag("--json", in_json, "machine-readable output");

  // verify
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  std::string v_suite, v_n;
  int v_k = 3;
  bool v_symbolic = false;
  uint64_t v_seed = 0, v_stream = 0;
  verify->add_option("suite", v_suite, "recursion | bounds | three-path | mc:<samples>")
      ->required();
  verify->add_option("--k", v_k, "degree");
  verify->add_flag("--symbolic", v_symbolic, "symbolic mode where applicable");
  verify->add_option("--n", v_n, "dimension");
  auto* seed_opt = verify->add_option("--seed", v_seed, "rng seed (required for mc)");
  verify->add_option("--stream", v_stream, "rng stream id");

  // channel
  auto* chan = app.add_subcommand("channel", "random-channel spectrum demo");
  int c_n = 30, c_k = 2;
  long c_samples = 1;
  std::string c_t = "1/2";
  uint64_t c_seed = 0, c_stream = 0;
  bool c_json = false;
  chan->add_option("--n", c_n, "output dimension per factor");
  chan->add_option("--k", c_k, "environment dimension");
  chan->add_option("--t", c_t, "input fraction in (0,1], rational or decimal");
  chan->add_option("--samples", c_samples, "independent channel draws");
  chan->add_option("--seed", c_seed, "rng seed")->required();
  chan->add_option("--stream", c_stream, "rng stream id");
  chan->add_flag("--json", c_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (wg->parsed())
      return run_wg(wg_group, wg_k, wg_key, wg_symbolic, wg_n, wg_methods, wg_all, wg_json,
                    wg_nocache);
    if (integ->parsed()) return run_integrate(in_group, in_monomial, in_symbolic, in_n, in_json);
    if (verify->parsed())
      return run_verify(v_suite, v_k, v_symbolic, v_n, v_seed, seed_opt->count() > 0, v_stream);
    if (chan->parsed()) {
      const auto rep = hw::channel_demo(c_n, c_k, parse_ratio(c_t), c_samples,
                                        {c_seed, c_stream});
      if (c_json) {
        std::cout << rep.to_json() << "\n";
      } else {
        std::cout << "n=" << rep.n << " k=" << rep.k << " t=" << rep.t.to_string()
                  << " p=" << rep.p << "\n";
        for (size_t i = 0; i < rep.eigenvalues.size(); ++i) {
          std::cout << "  eigenvalue " << (i + 1) << ": " << rep.eigenvalues[i];
          if (i < rep.expected.size()) std::cout << " (limit " << rep.expected[i] << ")";
          std::cout << "\n";
        }
        std::cout << "  tail ratio: " << rep.tail_ratio << "\n";
      }
      return 0;
    }
  } catch (const hw::CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const hw::PoleError& e) {
    std::cerr << "outside validity region: " << e.what() << "\n";
    return kExitPole;
  } catch (const hw::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
