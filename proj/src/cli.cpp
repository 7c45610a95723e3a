#include "artin/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "artin/error.hpp"
#include "artin/oracle.hpp"
#include "artin/orderings.hpp"
#include "artin/palindromes.hpp"

namespace artin::cli {

namespace {

using Json = nlohmann::ordered_json;

// Signals a false predicate (exit 1) after the result has been printed.
struct Falsity {};

struct Options {
  std::string type;
  std::string matrix_file;
  std::string presentation_file;
  std::string order = "dehornoy";
  bool opp = false;
  bool json = false;
  bool commuting = false;
  std::optional<std::size_t> budget;
  std::vector<std::string> args;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json word_json(const Word& w) { return format_word(w); }

Json set_json(const GeneratorSet& s) { return s.indices(); }

class Session {
 public:
  Session(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  void dispatch(const std::string& cmd) {
    static const std::map<std::string, void (Session::*)()> table = {
        {"eq", &Session::eq},
        {"nf", &Session::nf},
        {"extract", &Session::extract},
        {"lcm", &Session::lcm},
        {"delta", &Session::delta},
        {"sset", &Session::sset},
        {"fset", &Session::fset},
        {"rev", &Session::rev},
        {"tau", &Session::tau},
        {"pal", &Session::pal_cmd},
        {"unpal", &Session::unpal_cmd},
        {"is-pal", &Session::is_pal},
        {"is-pure", &Session::is_pure},
        {"decompose", &Session::decompose_cmd},
        {"decompose-canonical", &Session::decompose_canonical},
        {"decompose-tau", &Session::decompose_tau},
        {"symmetrize", &Session::symmetrize},
        {"delta-assoc", &Session::delta_assoc},
        {"sign", &Session::sign},
        {"cmp", &Session::cmp},
        {"oracle-eq", &Session::oracle_eq},
        {"oracle-decomps", &Session::oracle_decomps},
        {"oracle-squarefree", &Session::oracle_squarefree},
        {"weyl-order", &Session::weyl_order},
        {"weyl-involutions", &Session::weyl_involutions},
    };
    cmd_ = cmd;
    (this->*table.at(cmd))();
  }

 private:
  // Type selection -------------------------------------------------------------------

  const CoxeterMatrix& matrix() {
    if (!matrix_) {
      const int selectors = !opt_.type.empty() + !opt_.matrix_file.empty();
      if (selectors != 1) throw CLI::ValidationError("exactly one of --type and --matrix is required");
      matrix_ = opt_.type.empty() ? parse_matrix(read_file(opt_.matrix_file))
                                  : builtin_from_name(opt_.type);
    }
    return *matrix_;
  }

  const ArtinMonoid& monoid() {
    if (!monoid_) monoid_.emplace(matrix());
    return *monoid_;
  }

  const ArtinGroup& group() {
    if (!group_) group_.emplace(matrix());
    return *group_;
  }

  oracle::Presentation presentation() {
    if (!opt_.presentation_file.empty()) {
      if (!opt_.type.empty() || !opt_.matrix_file.empty()) {
        throw CLI::ValidationError("--presentation excludes --type and --matrix");
      }
      return oracle::parse_presentation(read_file(opt_.presentation_file));
    }
    return oracle::artin_presentation(matrix());
  }

  // Arguments ------------------------------------------------------------------------

  void arity(std::size_t n) {
    if (opt_.args.size() != n) {
      throw CLI::ValidationError(cmd_ + " expects " + std::to_string(n) + " argument(s), got " +
                                 std::to_string(opt_.args.size()));
    }
  }

  Word word_arg(std::size_t i) {
    Word w = parse_word(opt_.args[i]);
    check_letters(w, matrix().rank());
    inputs_.push_back(format_word(w));
    return w;
  }

  Word positive_arg(std::size_t i) {
    Word w = parse_positive_word(opt_.args[i]);
    check_letters(w, matrix().rank());
    inputs_.push_back(format_word(w));
    return w;
  }

  GeneratorSet subset_arg(std::size_t i) {
    Word w = parse_positive_word(opt_.args[i]);
    inputs_.push_back(format_word(w));
    return GeneratorSet::from_indices(std::vector<int>(w.begin(), w.end()), matrix().rank());
  }

  GroupElement element_arg(std::size_t i) { return group().from_word(word_arg(i)); }

  // Output ---------------------------------------------------------------------------

  void emit(const Json& result, const std::string& text) {
    if (opt_.json) {
      Json rec;
      rec["command"] = cmd_;
      rec["inputs"] = inputs_;
      rec["result"] = result;
      out_ << rec.dump() << "\n";
    } else {
      out_ << text << "\n";
    }
  }

  void predicate(bool value) {
    emit(value, value ? "true" : "false");
    if (!value) throw Falsity{};
  }

  std::string element_text(const GroupElement& x) {
    return format_word(group().to_short_word(x));
  }

  Json element_json(const GroupElement& x) {
    return Json{{"word", element_text(x)}, {"k", x.k}, {"p", format_word(x.p)}};
  }

  void decomposition(const PalDecomposition& d, const GroupElement& x) {
    const bool ok = reconstructs(group(), d, x);
    Json rec{{"y", element_text(d.y)}, {"I", set_json(d.subset)}, {"reconstructs", ok}};
    emit(rec, "y=[" + element_text(d.y) + "] I=" + d.subset.to_string() +
                  (ok ? "" : " (reconstruction FAILED)"));
  }

  OrderingHandle element_order() { return group_ordering(group(), opt_.order); }

  // Commands -------------------------------------------------------------------------

  void eq() {
    arity(2);
    Word u = word_arg(0), v = word_arg(1);
    if (is_positive(u) && is_positive(v)) {
      predicate(monoid().equals(u, v));
    } else {
      predicate(group().eq(group().from_word(u), group().from_word(v)));
    }
  }

  void nf() {
    arity(1);
    auto heads = monoid().normal_form(positive_arg(0));
    Json rec = Json::array();
    std::string text;
    for (const auto& h : heads) {
      rec.push_back(set_json(h));
      text += (text.empty() ? "" : " ") + h.to_string();
    }
    emit(rec, text);
  }

  void extract() {
    arity(2);
    Word w = positive_arg(0);
    Word s = positive_arg(1);
    if (s.size() != 1) throw InvalidArgument("extract expects a single generator");
    auto tail = monoid().left_extract(w, s.front());
    if (!tail) {
      emit(nullptr, "none");
      throw Falsity{};
    }
    emit(word_json(*tail), format_word(*tail));
  }

  void lcm() {
    arity(2);
    Word u = positive_arg(0), v = positive_arg(1);
    LcmResult r = monoid().right_lcm(u, v, opt_.budget);
    if (r.status == LcmStatus::BudgetExceeded) {
      throw DomainError(DomainErrorKind::BudgetExceeded, "lcm search gave up; existence undecided");
    }
    if (r.status == LcmStatus::NoCommonMultiple) {
      emit(nullptr, "none");
      throw Falsity{};
    }
    emit(word_json(r.word), format_word(r.word));
  }

  void delta() {
    if (opt_.args.size() > 1) arity(1);
    if (opt_.args.empty()) {
      const Word& d = monoid().delta();
      emit(word_json(d), format_word(d));
      return;
    }
    GeneratorSet subset = subset_arg(0);
    LcmResult r = monoid().delta_result(subset, opt_.budget);
    if (r.status == LcmStatus::NoCommonMultiple) {
      throw DomainError(DomainErrorKind::InfiniteType, "the parabolic of " + subset.to_string() +
                                                           " is of infinite type");
    }
    if (r.status == LcmStatus::BudgetExceeded) {
      throw DomainError(DomainErrorKind::BudgetExceeded, "Delta_I search gave up");
    }
    emit(word_json(r.word), format_word(r.word));
  }

  void sset() {
    arity(1);
    GeneratorSet s = monoid().starting_set(positive_arg(0));
    emit(set_json(s), s.to_string());
  }

  void fset() {
    arity(1);
    GeneratorSet s = monoid().finishing_set(positive_arg(0));
    emit(set_json(s), s.to_string());
  }

  void rev() {
    arity(1);
    Word r = reversed(word_arg(0));
    emit(word_json(r), format_word(r));
  }

  void tau() {
    arity(1);
    Word w = word_arg(0);
    Word t = monoid().apply_tau(w);
    emit(word_json(t), format_word(t));
  }

  void pal_cmd() {
    arity(1);
    Word w = word_arg(0);
    Word p = free_reduce(concat(w, reversed(w)));
    emit(word_json(p), format_word(p));
  }

  void unpal_cmd() {
    arity(1);
    GroupElement d = unpal(group(), element_arg(0));
    emit(element_json(d), element_text(d));
  }

  void is_pal() {
    arity(1);
    Word w = word_arg(0);
    if (is_positive(w)) {
      predicate(monoid().equals(w, reversed(w)));
    } else {
      predicate(group().is_palindrome(group().from_word(w)));
    }
  }

  void is_pure() {
    arity(1);
    predicate(group().is_pure(element_arg(0)));
  }

  void decompose_cmd() {
    arity(1);
    GroupElement x = element_arg(0);
    decomposition(decompose(group(), x), x);
  }

  void decompose_canonical() {
    arity(1);
    GroupElement x = element_arg(0);
    CanonicalOptions co;
    co.opposite = opt_.opp;
    if (opt_.budget) co.budget = *opt_.budget;
    decomposition(canonical_decompose(group(), x, element_order(), co), x);
  }

  void decompose_tau() {
    arity(1);
    GroupElement x = element_arg(0);
    decomposition(decompose_rev_tau(group(), x), x);
  }

  void symmetrize() {
    arity(2);
    PalDecomposition d{element_arg(0), subset_arg(1)};
    SymmetrizeOptions so;
    so.commuting_target = opt_.commuting;
    if (opt_.budget) so.budget = *opt_.budget;
    decomposition(tau_symmetrize(group(), d, so), reconstruct(group(), d));
  }

  void delta_assoc() {
    arity(1);
    GroupElement d = delta_associated(group(), element_arg(0));
    emit(element_json(d), element_text(d));
  }

  OrderingHandle word_order() {
    const std::size_t n = matrix().rank();
    if (opt_.order == "magnus") return magnus_ordering();
    if (opt_.order == "dehornoy") {
      if (!(matrix() == builtin("A", static_cast<int>(n)))) {
        throw InvalidArgument("--order dehornoy needs --type A<n>");
      }
      return dehornoy_ordering(n + 1);
    }
    if (opt_.order == "typeb") {
      if (n < 2 || !(matrix() == builtin("B", static_cast<int>(n)))) {
        throw InvalidArgument("--order typeb needs --type B<n>");
      }
      return typeB_order(n);
    }
    throw InvalidArgument("unknown order '" + opt_.order + "'");
  }

  void sign() {
    arity(1);
    Word w = word_arg(0);
    Sign s = word_order().sign(w);
    emit(to_string(s), to_string(s));
  }

  void cmp() {
    arity(2);
    Word u = word_arg(0), v = word_arg(1);
    Comparison c = word_order().compare(u, v);
    emit(to_string(c), to_string(c));
  }

  oracle::Budget oracle_budget() {
    oracle::Budget b;
    if (opt_.budget) b.max_class_size = *opt_.budget;
    return b;
  }

  Word oracle_word(std::size_t i, const oracle::Presentation& p) {
    Word w = parse_positive_word(opt_.args[i]);
    check_letters(w, p.generators);
    inputs_.push_back(format_word(w));
    return w;
  }

  void oracle_eq() {
    arity(2);
    auto p = presentation();
    Word u = oracle_word(0, p), v = oracle_word(1, p);
    predicate(oracle::equals_oracle(p, u, v, oracle_budget()));
  }

  void oracle_squarefree() {
    arity(1);
    auto p = presentation();
    predicate(oracle::square_free_oracle(p, oracle_word(0, p), oracle_budget()));
  }

  void oracle_decomps() {
    arity(1);
    Word w = positive_arg(0);
    auto all = oracle::all_pal_decompositions(matrix(), w, oracle_budget());
    Json rec = Json::array();
    std::string text;
    for (const auto& d : all) {
      rec.push_back(Json{{"y", format_word(d.y)}, {"I", set_json(d.subset)}});
      if (!text.empty()) text += "\n";
      text += "y=[" + format_word(d.y) + "] I=" + d.subset.to_string();
    }
    emit(rec, text.empty() ? "none" : text);
  }

  std::size_t weyl_cap() { return opt_.budget.value_or(1'000'000); }

  void weyl_order() {
    arity(0);
    RootSystemRep rep(matrix());
    const std::size_t order = enumerate_group(rep, weyl_cap()).size();
    emit(order, std::to_string(order));
  }

  void weyl_involutions() {
    arity(0);
    const auto elements = enumerate_group(group().weyl(), weyl_cap());
    Json rec = Json::array();
    std::string text;
    std::size_t count = 0;
    for (const auto& e : elements) {
      if (!e.element.is_involution()) continue;
      ++count;
      auto lift = lift_involution(group(), e.element, elements);
      Json item{{"witness", format_word(e.witness)}};
      std::string line = "[" + format_word(e.witness) + "]";
      if (lift) {
        item["y"] = format_word(lift->y.p);
        item["I"] = set_json(lift->subset);
        line += " y=[" + format_word(lift->y.p) + "] I=" + lift->subset.to_string();
      } else {
        item["y"] = nullptr;
        line += " no lift";
      }
      rec.push_back(item);
      text += line + "\n";
    }
    emit(Json{{"count", count}, {"involutions", rec}},
         "count " + std::to_string(count) + "\n" + text.substr(0, text.size() - 1));
  }

  const Options& opt_;
  std::ostream& out_;
  std::string cmd_;
  Json inputs_ = Json::array();
  std::optional<CoxeterMatrix> matrix_;
  std::optional<ArtinMonoid> monoid_;
  std::optional<ArtinGroup> group_;
};

const std::vector<std::pair<std::string, std::string>> kCommands = {
    {"eq", "equality of two words (monoid, or group for signed words)"},
    {"nf", "head sequence of the normal form"},
    {"extract", "left extraction of a generator"},
    {"lcm", "right lcm by word reversing"},
    {"delta", "fundamental element, of all generators or of a subset"},
    {"sset", "starting set"},
    {"fset", "finishing set"},
    {"rev", "reversed word"},
    {"tau", "conjugation by Delta on generators"},
    {"pal", "x rev(x)"},
    {"unpal", "inverse of pal on pure palindromes"},
    {"is-pal", "palindrome test"},
    {"is-pure", "trivial image in the Coxeter group"},
    {"decompose", "x = y Delta_I rev(y) by peeling"},
    {"decompose-canonical", "order-minimal decomposition by exhaustive search"},
    {"decompose-tau", "decomposition with tau(y) = y and tau(I) = I"},
    {"symmetrize", "move a decomposition (y, I) to a tau-invariant I"},
    {"delta-assoc", "delta with x = Delta delta rev(delta)"},
    {"sign", "sign in a left order"},
    {"cmp", "comparison in a left order"},
    {"oracle-eq", "equality by brute-force rewriting"},
    {"oracle-decomps", "all decompositions of a positive palindrome, by brute force"},
    {"oracle-squarefree", "square-freeness by brute force"},
    {"weyl-order", "order of the Coxeter group"},
    {"weyl-involutions", "involutions of the Coxeter group with palindromic lifts"},
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations in Artin monoids and groups", "artin"};
  app.fallthrough();
  app.require_subcommand(1);
  Options opt;
  app.add_option("--type", opt.type, "builtin type, e.g. A3, B4, H3, I2(7)");
  app.add_option("--matrix", opt.matrix_file, "Coxeter matrix file");
  app.add_option("--presentation", opt.presentation_file, "presentation file (oracle commands)");
  app.add_option("--order", opt.order, "dehornoy, magnus or typeb")->capture_default_str();
  app.add_flag("--opp", opt.opp, "compare Delta_I by the opposite order");
  app.add_flag("--commuting", opt.commuting, "symmetrize: require a commuting target");
  app.add_option("--budget", opt.budget, "search budget");
  app.add_flag("--json", opt.json, "one JSON record on stdout");
  for (const auto& [name, help] : kCommands) {
    app.add_subcommand(name, help)->add_option("args", opt.args, "words and subsets");
  }

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  Session session(opt, out);
  try {
    session.dispatch(app.get_subcommands().front()->get_name());
    return 0;
  } catch (const Falsity&) {
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace artin::cli
