#include "projaut/textio.hpp"

#include <fstream>
#include <sstream>

namespace projaut {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string t;
  while (in >> t) {
    if (t[0] == '#') break;
    tokens.push_back(t);
  }
  return tokens;
}

struct LineReader {
  explicit LineReader(std::istream& stream) : in(stream) {}

  std::istream& in;
  std::vector<std::string> pending;
  bool has_pending = false;

  bool next(std::vector<std::string>& tokens) {
    if (has_pending) {
      tokens = std::move(pending);
      has_pending = false;
      return true;
    }
    std::string line;
    while (std::getline(in, line)) {
      tokens = tokenize(line);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  void push_back(std::vector<std::string> tokens) {
    pending = std::move(tokens);
    has_pending = true;
  }
};

}  // namespace

ActionGroup read_action_group(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tok;

  int genus = -1;
  BaseStructure base = BaseStructure::fuchsian;
  bool saw_base = false;
  std::vector<AffineAutAction> matrix_gens;
  std::vector<MonomialAction> monomial_gens;

  while (reader.next(tok)) {
    if (tok[0] == "genus") {
      if (tok.size() != 2) fail(errc::bad_input, "genus line needs one value");
      genus = std::stoi(tok[1]);
    } else if (tok[0] == "base") {
      if (tok.size() != 2 || (tok[1] != "fuchsian" && tok[1] != "other"))
        fail(errc::bad_input, "base must be 'fuchsian' or 'other'");
      base = tok[1] == "fuchsian" ? BaseStructure::fuchsian : BaseStructure::other;
      saw_base = true;
    } else if (tok[0] == "generator") {
      if (genus < 2) fail(errc::bad_input, "genus must come before the generators");
      int d = 3 * genus - 3;
      if (tok.size() == 3 && tok[2] == "monomial") {
        MonomialAction act;
        act.label = tok[1];
        bool have_modulus = false;
        while (reader.next(tok)) {
          if (tok[0] == "modulus" && tok.size() == 2) {
            act.modulus = std::stol(tok[1]);
            have_modulus = true;
          } else if (tok[0] == "exponents") {
            for (size_t k = 1; k < tok.size(); ++k) act.exponents.push_back(std::stol(tok[k]));
          } else if (tok[0] == "signs") {
            for (size_t k = 1; k < tok.size(); ++k) {
              if (tok[k] == "+" || tok[k] == "+1")
                act.signs.push_back(+1);
              else if (tok[k] == "-" || tok[k] == "-1")
                act.signs.push_back(-1);
              else
                fail(errc::bad_input, "signs must be '+' or '-'");
            }
          } else {
            reader.push_back(std::move(tok));
            break;
          }
        }
        if (!have_modulus) fail(errc::bad_input, "monomial generator needs a modulus");
        if (act.signs.empty()) act.signs.assign(act.exponents.size(), +1);
        if (static_cast<int>(act.exponents.size()) != d ||
            act.signs.size() != act.exponents.size())
          fail(errc::bad_input, "monomial generator '" + act.label + "' needs " +
                                    std::to_string(d) + " exponents and signs");
        monomial_gens.push_back(std::move(act));
      } else if (tok.size() == 2) {
        AffineAutAction act;
        act.label = tok[1];
        if (!reader.next(tok) || tok[0] != "matrix")
          fail(errc::bad_input, "generator '" + act.label + "' needs a matrix block");
        act.pullback = ScalarMatrix(d, d);
        for (int r = 0; r < d; ++r) {
          if (!reader.next(tok) || static_cast<int>(tok.size()) != d)
            fail(errc::bad_input, "matrix row " + std::to_string(r + 1) + " needs " +
                                      std::to_string(d) + " entries");
          for (int c = 0; c < d; ++c) act.pullback.at(r, c) = parse_scalar(tok[static_cast<size_t>(c)]);
        }
        act.translation.assign(static_cast<size_t>(d), Scalar::zero());
        if (reader.next(tok)) {
          if (tok[0] == "translation") {
            if (static_cast<int>(tok.size()) != d + 1)
              fail(errc::bad_input, "translation line needs " + std::to_string(d) + " entries");
            for (int c = 0; c < d; ++c)
              act.translation[static_cast<size_t>(c)] = parse_scalar(tok[static_cast<size_t>(c + 1)]);
          } else {
            reader.push_back(std::move(tok));
          }
        }
        matrix_gens.push_back(std::move(act));
      } else {
        fail(errc::bad_input, "generator line needs a label");
      }
    } else {
      fail(errc::bad_input, "unexpected directive '" + tok[0] + "'");
    }
  }

  if (genus < 2) fail(errc::bad_input, "action file needs 'genus <g>' with g >= 2");
  if (!saw_base) fail(errc::bad_input, "action file needs 'base fuchsian' or 'base other'");
  if (!matrix_gens.empty() && !monomial_gens.empty())
    fail(errc::bad_input, "cannot mix matrix and monomial generators in one file");
  if (!monomial_gens.empty())
    return ActionGroup::with_monomials(genus, base, std::move(monomial_gens));
  return ActionGroup::with_matrices(genus, base, std::move(matrix_gens));
}

ActionGroup parse_action_group(const std::string& text) {
  std::istringstream in(text);
  return read_action_group(in);
}

ActionGroup read_action_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::bad_input, "cannot open action file '" + path + "'");
  return read_action_group(in);
}

void write_action_group(std::ostream& out, const ActionGroup& group) {
  out << "genus " << group.genus() << "\n";
  out << "base " << base_structure_name(group.base()) << "\n";
  for (const AffineAutAction& a : group.matrix_generators()) {
    out << "generator " << a.label << "\n";
    out << "matrix\n";
    for (int r = 0; r < a.pullback.rows; ++r) {
      for (int c = 0; c < a.pullback.cols; ++c)
        out << (c ? " " : "") << a.pullback.at(r, c);
      out << "\n";
    }
    bool zero = true;
    for (const Scalar& t : a.translation) zero = zero && t.is_zero();
    if (!zero) {
      out << "translation";
      for (const Scalar& t : a.translation) out << " " << t;
      out << "\n";
    }
  }
  for (const MonomialAction& a : group.monomial_generators()) {
    out << "generator " << a.label << " monomial\n";
    out << "modulus " << a.modulus << "\n";
    out << "exponents";
    for (long e : a.exponents) out << " " << e;
    out << "\nsigns";
    for (int s : a.signs) out << " " << (s > 0 ? "+" : "-");
    out << "\n";
  }
}

std::string action_group_to_text(const ActionGroup& group) {
  std::ostringstream os;
  write_action_group(os, group);
  return os.str();
}

std::vector<Scalar> parse_scalar_list(const std::string& text) {
  std::vector<Scalar> out;
  std::string token;
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\n') {
      if (!token.empty()) {
        out.push_back(parse_scalar(token));
        token.clear();
      }
    } else {
      token += ch;
    }
  }
  if (!token.empty()) out.push_back(parse_scalar(token));
  if (out.empty()) fail(errc::bad_input, "empty coefficient list");
  return out;
}

}  // namespace projaut
