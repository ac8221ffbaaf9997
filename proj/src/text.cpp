#include "bv/text.hpp"

#include <cctype>
#include <cstdlib>
#include <utility>

namespace bv {

ParseError::ParseError(const std::string& msg, int line, int col)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + msg),
      line(line),
      col(col) {}

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;
  int line = 1, col = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  char take() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skip_blanks() {
    while (!done() && (peek() == ' ' || peek() == '\t')) take();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line, col);
  }
};

BinaryTree parse_tree_at(Cursor& c) {
  if (c.done() || c.peek() != '(') c.fail("expected '('");
  c.take();
  if (c.done()) c.fail("unterminated tree");
  if (c.peek() == ')') {
    c.take();
    return BinaryTree::leaf();
  }
  BinaryTree l = parse_tree_at(c);
  BinaryTree r = parse_tree_at(c);
  if (c.done() || c.peek() != ')') c.fail("expected ')'");
  c.take();
  return BinaryTree::caret(std::move(l), std::move(r));
}

long parse_int_at(Cursor& c) {
  const int line = c.line, col = c.col;
  std::string digits;
  if (!c.done() && (c.peek() == '-' || c.peek() == '+'))
    digits += c.take();
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
    digits += c.take();
  if (digits.empty() || digits == "-" || digits == "+")
    throw ParseError("expected an integer", line, col);
  return std::strtol(digits.c_str(), nullptr, 10);
}

// One-line permutation of 1..n, e.g. "2 3 1".
Perm parse_perm_at(Cursor& c, int n) {
  const int line = c.line, col = c.col;
  Perm p;
  for (int k = 0; k < n; ++k) {
    c.skip_blanks();
    long v = parse_int_at(c);
    if (v < 1 || v > n)
      throw ParseError("permutation image out of range", line, col);
    p.push_back(static_cast<int32_t>(v - 1));
  }
  if (!perm_is_valid(p))
    throw ParseError("not a permutation", line, col);
  return p;
}

BraidWord parse_braid_line(Cursor& c, int n) {
  c.skip_blanks();
  if (!c.done() && c.peek() == 'i') {
    if (c.take() != 'i' || c.done() || c.take() != 'd')
      c.fail("expected \"id\"");
    return BraidWord(n);
  }
  if (!c.done() && c.peek() == 'D') {
    c.take();
    if (c.done() || c.take() != '^') c.fail("expected '^' after 'D'");
    const long power = parse_int_at(c);
    c.skip_blanks();
    if (c.done() || c.take() != '|') c.fail("expected '|'");
    NormalForm nf;
    nf.n = n;
    nf.delta_power = power;
    c.skip_blanks();
    while (!c.done() && c.peek() != '\n') {
      nf.factors.push_back({parse_perm_at(c, n)});
      c.skip_blanks();
      if (!c.done() && c.peek() == ';') {
        c.take();
        c.skip_blanks();
        if (c.done() || c.peek() == '\n') c.fail("expected a factor after ';'");
      }
    }
    return word_of(nf);
  }
  // Artin word: tokens s<k> or S<k>.
  BraidWord w(n);
  while (true) {
    c.skip_blanks();
    if (c.done() || c.peek() == '\n') break;
    const int line = c.line, col = c.col;
    const char tag = c.take();
    if (tag != 's' && tag != 'S')
      throw ParseError("expected 's', 'S', 'D', or \"id\"", line, col);
    const long k = parse_int_at(c);
    if (k < 1 || k > n - 1)
      throw ParseError("crossing index out of range", line, col);
    Perm t = perm_identity(n);
    std::swap(t[k - 1], t[k]);
    w.push(simple_from_permutation(std::move(t)), tag == 's' ? +1 : -1);
  }
  return w;
}

// "T: " etc.; returns the rest of the line with the prefix stripped.
void expect_prefix(Cursor& c, const std::string& prefix) {
  c.skip_blanks();
  for (char want : prefix) {
    if (c.done() || c.peek() != want) c.fail("expected \"" + prefix + "\"");
    c.take();
  }
}

void expect_line_end(Cursor& c) {
  c.skip_blanks();
  if (c.done()) return;
  if (c.peek() != '\n') c.fail("unexpected trailing text");
  c.take();
}

}  // namespace

std::string print_tree(const BinaryTree& t) {
  if (t.is_leaf()) return "()";
  return "(" + print_tree(t.left()) + print_tree(t.right()) + ")";
}

std::string print_artin(const std::vector<ArtinGen>& w) {
  if (w.empty()) return "id";
  std::string s;
  for (const ArtinGen& g : w) {
    if (!s.empty()) s += ' ';
    s += g.sign > 0 ? 's' : 'S';
    s += std::to_string(g.pos + 1);
  }
  return s;
}

std::string print_normal_form(const NormalForm& nf) {
  std::string s = "D^" + std::to_string(nf.delta_power) + " |";
  for (size_t k = 0; k < nf.factors.size(); ++k) {
    s += k == 0 ? " " : " ; ";
    const Perm& p = nf.factors[k].perm;
    for (size_t i = 0; i < p.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(p[i] + 1);
    }
  }
  return s;
}

std::string print_element(const BVElement& e) {
  return "T: " + print_tree(e.top()) + "\n" +
         "B: " + print_normal_form(e.braid()) + "\n" +
         "Tb: " + print_tree(e.bot()) + "\n";
}

BinaryTree parse_tree(const std::string& text) {
  Cursor c{text};
  c.skip_blanks();
  BinaryTree t = parse_tree_at(c);
  c.skip_blanks();
  if (!c.done()) c.fail("unexpected trailing text");
  return t;
}

BVElement parse_element(const std::string& text) {
  Cursor c{text};
  expect_prefix(c, "T:");
  c.skip_blanks();
  BinaryTree top = parse_tree_at(c);
  expect_line_end(c);

  expect_prefix(c, "B:");
  BraidWord braid = parse_braid_line(c, top.leaf_count());
  expect_line_end(c);

  expect_prefix(c, "Tb:");
  c.skip_blanks();
  BinaryTree bot = parse_tree_at(c);
  if (bot.leaf_count() != top.leaf_count())
    c.fail("top and bottom trees have different leaf counts");
  expect_line_end(c);
  while (!c.done()) {
    if (c.peek() != '\n' && c.peek() != ' ' && c.peek() != '\t')
      c.fail("unexpected trailing text");
    c.take();
  }
  return reduce({std::move(top), std::move(braid), std::move(bot)});
}

std::vector<GenLetter> parse_gen_word(const std::string& text) {
  Cursor c{text};
  std::vector<GenLetter> out;
  while (true) {
    while (!c.done() && (c.peek() == ' ' || c.peek() == '\t' ||
                         c.peek() == '\n'))
      c.take();
    if (c.done()) break;
    const int line = c.line, col = c.col;
    const char tag = c.take();
    GenFamily fam;
    switch (tag) {
      case 'f': case 'F': fam = GenFamily::f; break;
      case 'b': case 'B': fam = GenFamily::b; break;
      case 'a': case 'A': fam = GenFamily::a; break;
      default:
        throw ParseError("expected a generator letter f/b/a/F/B/A", line, col);
    }
    if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
      c.fail("expected a generator index");
    const long idx = parse_int_at(c);
    out.push_back({fam, static_cast<int>(idx),
                   std::isupper(static_cast<unsigned char>(tag)) ? -1 : +1});
  }
  return out;
}

}  // namespace bv
