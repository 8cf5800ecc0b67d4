#include "formsig/commands.hpp"

#include "formsig/acceptance.hpp"
#include "formsig/report.hpp"
#include "formsig/transfer.hpp"

#include <sstream>

namespace formsig {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SearchBudget budget_of(const Scenario& s, const CommandOptions& opt) {
  SearchBudget b = s.budget;
  if (opt.budget_height) b.height = *opt.budget_height;
  return b;
}

const HermForm& pick_form(const Scenario& s, const CommandOptions& opt) {
  if (!opt.form_name.empty()) {
    const HermForm* f = s.find_form(opt.form_name);
    if (!f) throw UsageError("no [form." + opt.form_name + "] in the scenario");
    return *f;
  }
  if (s.forms.empty()) throw UsageError("the scenario defines no [form.*]");
  return s.forms.front().second;
}

const InvolutiveAlgebra& need_algebra(const Scenario& s) {
  if (!s.algebra) throw UsageError("the command needs an [algebra] section");
  return *s.algebra;
}

const RelativeEtale& need_extension(const Scenario& s) {
  if (!s.extension) throw UsageError("the command needs an [extension] section");
  return *s.extension;
}

RelHermForm central_diag(const RelInvolutiveAlgebra& AE,
                         const std::vector<TotalElement>& entries) {
  std::vector<AlgElemT<RelativeEtale>> d;
  for (const auto& e : entries) {
    AlgElemT<RelativeEtale> s = AE.zero_elem();
    for (int i = 0; i < AE.n(); ++i) s.at(i, i) = AE.dfrom_base(e);
    d.push_back(std::move(s));
  }
  return diagonal_form(AE, d);
}

int cmd_orderings(const Scenario& s, const CommandOptions& opt,
                  std::ostream& out) {
  const EtaleAlgebra& K = *s.base;
  const auto& ords = K.orderings();
  for (std::size_t i = 0; i < ords.size(); ++i) {
    if (opt.json) {
      out << "{\"ordering\": " << i << ", \"factor\": " << ords[i].factor_index
          << ", \"lo\": \"" << rational_to_string(ords[i].root.lo)
          << "\", \"hi\": \"" << rational_to_string(ords[i].root.hi) << "\"}\n";
    } else {
      out << "ordering " << i << ": factor " << ords[i].factor_index << ", root in ["
          << rational_to_string(ords[i].root.lo) << ", "
          << rational_to_string(ords[i].root.hi) << "]\n";
    }
  }
  return kExitPass;
}

int cmd_nil(const Scenario& s, const CommandOptions& opt, std::ostream& out) {
  const InvolutiveAlgebra& A = need_algebra(s);
  const auto& ords = A.base().orderings();
  for (std::size_t i = 0; i < ords.size(); ++i) {
    bool nil = A.is_nil_at(ords[i]);
    if (opt.json) {
      out << "{\"ordering\": " << i << ", \"nil\": " << (nil ? "true" : "false")
          << ", \"type\": \"" << involution_type_name(A.type_at(ords[i]))
          << "\"}\n";
    } else {
      out << "ordering " << i << ": " << involution_type_name(A.type_at(ords[i]))
          << (nil ? ", nil" : "") << "\n";
    }
  }
  return kExitPass;
}

int cmd_sign(const Scenario& s, const CommandOptions& opt, std::ostream& out) {
  const InvolutiveAlgebra& A = need_algebra(s);
  const HermForm& h = pick_form(s, opt);
  std::vector<ValueRow> rows;
  const auto& ords = A.base().orderings();
  for (std::size_t i = 0; i < ords.size(); ++i)
    rows.push_back({static_cast<int>(i), m_signature(h, ords[i])});
  write_value_rows(out, rows, opt.json);
  return kExitPass;
}

int cmd_total(const Scenario& s, const CommandOptions& opt, std::ostream& out) {
  const InvolutiveAlgebra& A = need_algebra(s);
  const HermForm& h = pick_form(s, opt);
  ReferenceForm eta = s.find_form("eta")
                          ? ReferenceForm::wrap(*s.find_form("eta"))
                          : find_reference_form(A, budget_of(s, opt));
  TotalSignature t = total_signature(h, eta);
  std::vector<ValueRow> rows;
  for (std::size_t i = 0; i < t.values.size(); ++i)
    rows.push_back({static_cast<int>(i), t.values[i]});
  write_value_rows(out, rows, opt.json);
  return kExitPass;
}

int cmd_find_ref(const Scenario& s, const CommandOptions& opt,
                 std::ostream& out) {
  const InvolutiveAlgebra& A = need_algebra(s);
  ReferenceForm eta = find_reference_form(A, budget_of(s, opt));
  if (!opt.json) out << "reference form of rank " << eta.form.dim() << "\n";
  std::vector<ValueRow> rows;
  for (std::size_t i = 0; i < eta.m_signs.size(); ++i)
    rows.push_back({static_cast<int>(i), eta.m_signs[i]});
  write_value_rows(out, rows, opt.json);
  return kExitPass;
}

int cmd_two_power(const Scenario& s, const CommandOptions& opt,
                  std::ostream& out) {
  const InvolutiveAlgebra& A = need_algebra(s);
  SearchBudget budget = budget_of(s, opt);
  ReferenceForm eta = find_reference_form(A, budget);
  if (s.target_total) {
    TwoPowerMatch m =
        two_power_multiple_match(TotalSignature{*s.target_total}, A, eta, budget);
    if (!m.found) {
      out << (opt.json ? "{\"found\": false, \"failure\": \"" + m.failure + "\"}\n"
                       : "no match: " + m.failure + "\n");
      return kExitCheckFailure;
    }
    if (opt.json)
      out << "{\"found\": true, \"exponent\": " << m.exponent
          << ", \"rank\": " << m.form->dim() << "}\n";
    else
      out << "matched with exponent " << m.exponent << ", rank "
          << m.form->dim() << "\n";
    return kExitPass;
  }
  TwoPowerForm tp = find_two_power_form(A, eta, budget);
  TotalSignature t = total_signature(tp.form, eta);
  if (opt.json) {
    out << "{\"exponent\": " << tp.exponent << ", \"rank\": " << tp.form.dim()
        << "}\n";
  } else {
    out << "two-power form of rank " << tp.form.dim() << " with exponent "
        << tp.exponent << "\n";
  }
  std::vector<ValueRow> rows;
  for (std::size_t i = 0; i < t.values.size(); ++i)
    rows.push_back({static_cast<int>(i), t.values[i]});
  write_value_rows(out, rows, opt.json);
  return kExitPass;
}

int cmd_transfer_check(const Scenario& s, const CommandOptions& opt,
                       std::ostream& out) {
  const RelativeEtale& E = need_extension(s);
  Report report;
  const auto& base_ords = E.base().orderings();
  // Quadratic forms from the scenario, or the unit form.
  std::vector<std::pair<std::string, RelQuadForm>> qs;
  for (const auto& ef : s.extended_forms) {
    std::vector<TotalElement> d = ef.entries;
    qs.emplace_back(ef.name, qf_diagonal(E, d));
  }
  if (qs.empty())
    qs.emplace_back("unit", qf_diagonal(E, std::vector<TotalElement>{E.one()}));
  for (const auto& [name, q] : qs) {
    for (std::size_t i = 0; i < base_ords.size(); ++i) {
      KtfReport rep = verify_ktf_commutative(E, q, base_ords[i]);
      CheckRecord rec;
      rec.name = "ktf-commutative/" + name + "/alpha" + std::to_string(i);
      rec.lhs = rep.lhs;
      rec.rhs = rep.rhs;
      rec.r = rep.r;
      rec.t = rep.t;
      rec.per_gamma = rep.per_gamma;
      rec.pass = rep.pass;
      report.records.push_back(std::move(rec));
    }
  }
  // With an algebra present, also check extension counting, the nil
  // correspondence, and reference-form compatibility along the extension.
  if (s.algebra) {
    TransferContext ctx(*s.algebra, E);
    ReferenceForm eta = find_reference_form(*s.algebra, budget_of(s, opt));
    std::uint64_t seed = opt.seed ? *opt.seed : s.seed;
    for (std::size_t i = 0; i < base_ords.size(); ++i) {
      ExtendNilReport rep =
          verify_extend_nil(ctx, base_ords[i], eta, 10, seed + i);
      CheckRecord rec;
      rec.name = "extend-nil/alpha" + std::to_string(i);
      rec.lhs = rep.transfer_signature;
      rec.rhs = rep.r;
      rec.pass = rep.pass;
      rec.note = rep.nil_correspondence ? "" : "nil correspondence failed";
      if (!rep.eta_extension_ok) rec.note += " reference extension failed";
      report.records.push_back(std::move(rec));
    }
  }
  if (opt.json)
    write_json_lines(out, report);
  else
    write_table(out, report);
  return report.all_pass() ? kExitPass : kExitCheckFailure;
}

int cmd_ktf_verify(const Scenario& s, const CommandOptions& opt,
                   std::ostream& out) {
  Report report;
  int count = opt.count ? *opt.count : s.count;
  std::uint64_t seed = opt.seed ? *opt.seed : s.seed;

  auto run_instance = [&](const std::string& name, const InvolutiveAlgebra& A,
                          const RelativeEtale& E,
                          const std::vector<TotalElement>& entries) {
    TransferContext ctx(A, E);
    ReferenceForm eta = find_reference_form(A);
    RelHermForm h = central_diag(ctx.extended, entries);
    const auto& ords = E.base().orderings();
    for (std::size_t i = 0; i < ords.size(); ++i) {
      KtfReport rep = verify_ktf_hermitian(ctx, h, ords[i], eta);
      CheckRecord rec;
      rec.name = name + "/alpha" + std::to_string(i);
      rec.lhs = rep.lhs;
      rec.rhs = rep.rhs;
      rec.r = rep.r;
      rec.t = rep.t;
      rec.per_gamma = rep.per_gamma;
      rec.pass = rep.pass;
      report.records.push_back(std::move(rec));
    }
  };

  if (count > 0) {
    std::vector<Scenario> corpus = corpus_generate(seed, count);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const Scenario& inst = corpus[i];
      run_instance("instance" + std::to_string(i), *inst.algebra,
                   *inst.extension, inst.extended_forms.front().entries);
    }
  } else {
    const InvolutiveAlgebra& A = need_algebra(s);
    const RelativeEtale& E = need_extension(s);
    if (s.extended_forms.empty())
      throw UsageError("ktf-verify needs an [extform.*] section or a count");
    for (const auto& ef : s.extended_forms)
      run_instance(ef.name, A, E, ef.entries);
  }
  if (opt.json)
    write_json_lines(out, report);
  else
    write_table(out, report);
  return report.all_pass() ? kExitPass : kExitCheckFailure;
}

int cmd_morita_check(const Scenario& s, const CommandOptions& opt,
                     std::ostream& out) {
  const InvolutiveAlgebra& A = need_algebra(s);
  if (!s.algebra_target)
    throw UsageError("morita-check needs an [algebra.target] section");
  MoritaContext ctx(A, *s.algebra_target);
  ReferenceForm eta = find_reference_form(A, budget_of(s, opt));
  HermForm eta_padded = herm_repeat(eta.form, copies_for_target(ctx, eta.form));
  ReferenceForm feta = ReferenceForm::wrap(functor_F(ctx, eta_padded));

  Report report;
  if (s.forms.empty()) throw UsageError("morita-check needs [form.*] sections");
  for (const auto& [name, h] : s.forms) {
    HermForm fh = functor_F(ctx, h);
    const auto& ords = A.base().orderings();
    for (std::size_t i = 0; i < ords.size(); ++i) {
      CheckRecord rec;
      rec.name = "morita/" + name + "/alpha" + std::to_string(i);
      rec.lhs = eta_signature(h, ords[i], eta);
      rec.rhs = eta_signature(fh, ords[i], feta);
      rec.pass = rec.lhs == rec.rhs;
      report.records.push_back(std::move(rec));
    }
  }
  if (opt.json)
    write_json_lines(out, report);
  else
    write_table(out, report);
  return report.all_pass() ? kExitPass : kExitCheckFailure;
}

int cmd_selftest(const CommandOptions& opt, std::ostream& out) {
  auto results = run_acceptance_criteria();
  bool all = true;
  for (const auto& r : results) {
    if (opt.json) {
      out << "{\"criterion\": " << r.index << ", \"name\": \"" << r.name
          << "\", \"pass\": " << (r.pass ? "true" : "false") << ", \"detail\": \""
          << r.detail << "\"}\n";
    } else {
      out << "criterion " << r.index << " (" << r.name << "): "
          << (r.pass ? "PASS" : "FAIL") << " [" << r.detail << "]\n";
    }
    all = all && r.pass;
  }
  return all ? kExitPass : kExitCheckFailure;
}

}  // namespace

int run_command(const std::string& command, const Scenario& scenario,
                const CommandOptions& options, std::ostream& out,
                std::ostream& err) {
  try {
    if (command == "orderings") return cmd_orderings(scenario, options, out);
    if (command == "nil") return cmd_nil(scenario, options, out);
    if (command == "sign") return cmd_sign(scenario, options, out);
    if (command == "total") return cmd_total(scenario, options, out);
    if (command == "find-ref") return cmd_find_ref(scenario, options, out);
    if (command == "two-power") return cmd_two_power(scenario, options, out);
    if (command == "transfer-check")
      return cmd_transfer_check(scenario, options, out);
    if (command == "ktf-verify") return cmd_ktf_verify(scenario, options, out);
    if (command == "morita-check")
      return cmd_morita_check(scenario, options, out);
    if (command == "selftest") return cmd_selftest(options, out);
    err << "unknown command: " << command << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SearchError& e) {
    err << "search failure: " << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace formsig
