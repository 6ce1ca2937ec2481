#include "scholarmatch/namekit.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <unordered_set>

namespace scholarmatch::namekit {

namespace {

constexpr std::size_t kMaxVariantsPerToken = 32;
constexpr std::size_t kMaxJoinedVariants = 64;

// Folding of one codepoint: primary ASCII form plus an optional
// alternative spelling (the German-style expansion, ue for u-umlaut).
struct Fold {
  const char* primary;
  const char* alt;
};

// Common Latin-1 / Latin Extended-A letters seen in author names.
Fold fold_codepoint(char32_t cp) {
  switch (cp) {
    case U'à': case U'á': case U'â': case U'ã': case U'ā': case U'ă': case U'ą':
      return {"a", nullptr};
    case U'ä': return {"a", "ae"};
    case U'å': return {"a", "aa"};
    case U'æ': return {"ae", nullptr};
    case U'ç': case U'ć': case U'č': case U'ĉ': return {"c", nullptr};
    case U'ď': case U'đ': return {"d", nullptr};
    case U'è': case U'é': case U'ê': case U'ë': case U'ē': case U'ė': case U'ę': case U'ě':
      return {"e", nullptr};
    case U'ğ': case U'ģ': return {"g", nullptr};
    case U'ì': case U'í': case U'î': case U'ï': case U'ī': case U'į': case U'ı':
      return {"i", nullptr};
    case U'ķ': return {"k", nullptr};
    case U'ł': case U'ľ': case U'ļ': return {"l", nullptr};
    case U'ñ': case U'ń': case U'ň': case U'ņ': return {"n", nullptr};
    case U'ò': case U'ó': case U'ô': case U'õ': case U'ō': case U'ő':
      return {"o", nullptr};
    case U'ö': return {"o", "oe"};
    case U'ø': return {"o", "oe"};
    case U'œ': return {"oe", nullptr};
    case U'ř': case U'ŕ': return {"r", nullptr};
    case U'ś': case U'š': case U'ş': case U'ș': return {"s", nullptr};
    case U'ß': return {"ss", nullptr};
    case U'ť': case U'ţ': case U'ț': return {"t", nullptr};
    case U'ù': case U'ú': case U'û': case U'ū': case U'ů': case U'ų':
      return {"u", nullptr};
    case U'ü': return {"u", "ue"};
    case U'ű': return {"u", "ue"};
    case U'ý': case U'ÿ': return {"y", nullptr};
    case U'ź': case U'ż': case U'ž': return {"z", nullptr};
    default: return {nullptr, nullptr};
  }
}

char32_t to_lower_cp(char32_t cp) {
  if (cp < 0x80) return static_cast<char32_t>(std::tolower(static_cast<int>(cp)));
  // Latin-1 uppercase block.
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  // Latin Extended-A mostly alternates upper/lower.
  if (cp >= 0x100 && cp <= 0x17F) {
    if (cp == 0x130) return U'i';  // dotted capital I
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  return cp;
}

// Minimal UTF-8 decoder; invalid bytes are skipped.
std::vector<char32_t> decode_utf8(const std::string& s) {
  std::vector<char32_t> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    char32_t cp = 0;
    std::size_t len = 1;
    if (c < 0x80) {
      cp = c;
    } else if ((c >> 5) == 0x6 && i + 1 < s.size()) {
      cp = (c & 0x1F) << 6 | (s[i + 1] & 0x3F);
      len = 2;
    } else if ((c >> 4) == 0xE && i + 2 < s.size()) {
      cp = (c & 0x0F) << 12 | (s[i + 1] & 0x3F) << 6 | (s[i + 2] & 0x3F);
      len = 3;
    } else if ((c >> 3) == 0x1E && i + 3 < s.size()) {
      cp = (c & 0x07) << 18 | (s[i + 1] & 0x3F) << 12 | (s[i + 2] & 0x3F) << 6 |
           (s[i + 3] & 0x3F);
      len = 4;
    } else {
      i += 1;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

// A token under construction: per-position primary text plus alternatives.
struct Unit {
  std::string primary;
  std::string alt;  // empty when no alternative spelling
};

void add_contractions(std::set<std::string>& variants) {
  // Plain-ASCII spellings like "mueller" should also match "muller".
  static const std::array<std::pair<const char*, char>, 3> kPairs = {{
      {"ae", 'a'}, {"oe", 'o'}, {"ue", 'u'}}};
  std::vector<std::string> pending(variants.begin(), variants.end());
  while (!pending.empty() && variants.size() < kMaxVariantsPerToken) {
    std::string v = std::move(pending.back());
    pending.pop_back();
    for (const auto& [digraph, single] : kPairs) {
      for (std::size_t pos = v.find(digraph); pos != std::string::npos;
           pos = v.find(digraph, pos + 1)) {
        std::string w = v.substr(0, pos) + single + v.substr(pos + 2);
        if (variants.insert(w).second) pending.push_back(std::move(w));
        if (variants.size() >= kMaxVariantsPerToken) return;
      }
    }
  }
}

Token make_token(const std::vector<Unit>& units) {
  std::set<std::string> variants;
  variants.insert(std::string());
  for (const auto& u : units) {
    std::set<std::string> next;
    for (const auto& prefix : variants) {
      next.insert(prefix + u.primary);
      if (!u.alt.empty() && next.size() < kMaxVariantsPerToken)
        next.insert(prefix + u.alt);
      if (next.size() >= kMaxVariantsPerToken) break;
    }
    variants = std::move(next);
  }
  std::string base;
  for (const auto& u : units) base += u.primary;
  add_contractions(variants);
  Token tok;
  tok.base = base;
  tok.variants.assign(variants.begin(), variants.end());
  return tok;
}

bool variants_intersect(const std::vector<std::string>& a,
                        const std::vector<std::string>& b) {
  // Both sides are small and sorted (set-built).
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = a[i].compare(b[j]);
    if (c == 0) return true;
    if (c < 0) ++i; else ++j;
  }
  return false;
}

std::size_t codepoint_length(const std::string& s) {
  return decode_utf8(s).size();
}

}  // namespace

bool tokens_match(const Token& a, const Token& b) {
  return variants_intersect(a.variants, b.variants);
}

bool tokens_match_prefix(const Token& full, const Token& partial) {
  for (const auto& p : partial.variants) {
    if (p.size() < 2) continue;
    for (const auto& f : full.variants) {
      if (f.size() > p.size() && f.compare(0, p.size(), p) == 0) return true;
    }
  }
  return false;
}

NormalizedText normalize(const std::string& raw) {
  NormalizedText out;
  std::vector<Unit> current;
  auto flush = [&] {
    if (!current.empty()) {
      out.tokens.push_back(make_token(current));
      current.clear();
    }
  };
  for (char32_t cp : decode_utf8(raw)) {
    cp = to_lower_cp(cp);
    if (cp < 0x80) {
      char c = static_cast<char>(cp);
      if (std::isalnum(static_cast<unsigned char>(c))) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
          flush();  // digits separate name material
        } else {
          current.push_back({std::string(1, c), ""});
        }
      } else if (c == '-' || std::isspace(static_cast<unsigned char>(c)) ||
                 c == '_' || c == '/') {
        flush();
      }
      // other ASCII punctuation is dropped in place ("M.C." -> "mc")
    } else {
      Fold f = fold_codepoint(cp);
      if (f.primary) current.push_back({f.primary, f.alt ? f.alt : ""});
      // unmapped non-Roman codepoints are dropped
    }
  }
  flush();
  return out;
}

std::string render(const NormalizedText& text) {
  std::string out;
  for (const auto& t : text.tokens) {
    if (!out.empty()) out += ' ';
    out += t.base;
  }
  return out;
}

bool is_title_token(const std::string& base) {
  static const std::unordered_set<std::string> kTitles = {
      "dr", "prof", "phd", "md", "mr", "ms", "mrs"};
  return kTitles.contains(base);
}

std::vector<Token> strip_titles(std::vector<Token> tokens) {
  while (!tokens.empty() && is_title_token(tokens.front().base))
    tokens.erase(tokens.begin());
  while (!tokens.empty() && is_title_token(tokens.back().base))
    tokens.pop_back();
  return tokens;
}

namespace {

// Raw display-name word classified by its capitalization shape.
enum class WordKind { Initials, Word };

struct RawWord {
  std::string text;
  WordKind kind = WordKind::Word;
  std::string initial_letters;  // lowercase, only for Initials
};

bool ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool ascii_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

// "M.", "M.C.", "MC" (all-caps, <= 3 letters) count as initials.
bool classify_initials(const std::string& w, std::string& letters) {
  letters.clear();
  bool has_period = w.find('.') != std::string::npos;
  if (has_period) {
    std::size_t i = 0;
    while (i < w.size()) {
      if (!ascii_alpha(w[i])) return false;
      letters += static_cast<char>(std::tolower(w[i]));
      ++i;
      if (i < w.size()) {
        if (w[i] != '.') return false;
        ++i;
      }
    }
    return !letters.empty();
  }
  if (w.size() >= 1 && w.size() <= 3 &&
      std::all_of(w.begin(), w.end(), ascii_upper)) {
    for (char c : w) letters += static_cast<char>(std::tolower(c));
    return true;
  }
  return false;
}

std::vector<RawWord> split_words(const std::string& display) {
  std::vector<RawWord> words;
  std::string cur;
  auto flush = [&] {
    // trim surrounding punctuation that is not an initials period
    while (!cur.empty() && (cur.front() == ',' || cur.front() == '(' ||
                            cur.front() == '@'))
      cur.erase(cur.begin());
    while (!cur.empty() && (cur.back() == ',' || cur.back() == ')'))
      cur.pop_back();
    if (cur.empty()) return;
    RawWord w;
    w.text = cur;
    if (classify_initials(cur, w.initial_letters)) w.kind = WordKind::Initials;
    words.push_back(std::move(w));
    cur.clear();
  };
  for (char c : display) {
    if (std::isspace(static_cast<unsigned char>(c))) flush();
    else cur += c;
  }
  flush();
  return words;
}

void append_tokens(std::vector<Token>& dst, const std::string& raw) {
  for (auto& t : normalize(raw).tokens) dst.push_back(std::move(t));
}

bool parse_equal(const ParsedName& a, const ParsedName& b) {
  auto bases = [](const std::vector<Token>& ts) {
    std::string s;
    for (const auto& t : ts) s += t.base + ' ';
    return s;
  };
  return a.initials == b.initials && bases(a.given_tokens) == bases(b.given_tokens) &&
         bases(a.surname_tokens) == bases(b.surname_tokens);
}

void push_unique(std::vector<ParsedName>& out, ParsedName p) {
  if (p.given_tokens.empty() && p.initials.empty() && p.surname_tokens.empty())
    return;
  for (const auto& q : out)
    if (parse_equal(p, q)) return;
  out.push_back(std::move(p));
}

}  // namespace

std::vector<ParsedName> parse_display_name(const std::string& display) {
  std::vector<ParsedName> out;
  bool truncated = codepoint_length(display) == 20;

  std::vector<RawWord> words = split_words(display);
  // drop title words at either end
  auto is_title_word = [](const RawWord& w) {
    NormalizedText n = normalize(w.text);
    return n.tokens.size() == 1 && is_title_token(n.tokens[0].base);
  };
  while (!words.empty() && is_title_word(words.front())) words.erase(words.begin());
  while (!words.empty() && is_title_word(words.back())) words.pop_back();
  if (words.empty()) return out;

  if (words.size() == 1) {
    if (words[0].kind == WordKind::Word) {
      ParsedName p;
      p.template_id = Template::SingleToken;
      p.truncated = truncated;
      append_tokens(p.surname_tokens, words[0].text);
      push_unique(out, std::move(p));
    }
    return out;
  }

  // primary scan: leading initials, trailing surname word, middles into
  // given tokens or extra initials
  {
    ParsedName p;
    p.truncated = truncated;
    std::size_t i = 0;
    while (i < words.size() - 1 && words[i].kind == WordKind::Initials) {
      p.initials += words[i].initial_letters;
      ++i;
    }
    bool leading_initials = i > 0;
    if (words.back().kind == WordKind::Word) {
      for (; i + 1 < words.size(); ++i) {
        if (words[i].kind == WordKind::Initials) p.initials += words[i].initial_letters;
        else append_tokens(p.given_tokens, words[i].text);
      }
      append_tokens(p.surname_tokens, words.back().text);
      if (leading_initials && p.given_tokens.empty())
        p.template_id = Template::InitialsSurname;
      else if (!p.given_tokens.empty() && !leading_initials)
        p.template_id = Template::FirstSurname;
      else
        p.template_id = Template::Fallback;
    } else {
      // trailing initials: "Silva M."
      p.template_id = Template::SurnameInitials;
      append_tokens(p.surname_tokens, words[0].text);
      for (std::size_t j = 1; j < words.size(); ++j) {
        if (words[j].kind == WordKind::Initials) p.initials += words[j].initial_letters;
        else append_tokens(p.given_tokens, words[j].text);
      }
    }
    // prepend first letters of given tokens so initials stay consistent
    if (!p.given_tokens.empty() && !p.initials.empty()) {
      std::string lead;
      for (const auto& t : p.given_tokens)
        if (!t.base.empty()) lead += t.base[0];
      p.initials = lead + p.initials;
    }
    push_unique(out, std::move(p));
  }

  // multi-word surname hypothesis: the next-to-last word may belong to the
  // surname ("Ana Sanchez Gil" for the author Sanchez-Gil)
  if (words.size() >= 3 && words[words.size() - 1].kind == WordKind::Word &&
      words[words.size() - 2].kind == WordKind::Word) {
    ParsedName p;
    p.template_id = Template::FirstSurname;
    p.truncated = truncated;
    for (std::size_t i = 0; i + 2 < words.size(); ++i) {
      if (words[i].kind == WordKind::Initials) p.initials += words[i].initial_letters;
      else append_tokens(p.given_tokens, words[i].text);
    }
    append_tokens(p.surname_tokens, words[words.size() - 2].text);
    append_tokens(p.surname_tokens, words.back().text);
    if (!p.given_tokens.empty() && !p.initials.empty()) {
      std::string lead;
      for (const auto& t : p.given_tokens)
        if (!t.base.empty()) lead += t.base[0];
      p.initials = lead + p.initials;
    }
    push_unique(out, std::move(p));
  }

  // swapped-order hypothesis for two plain words ("Silva Maria")
  if (words.size() == 2 && words[0].kind == WordKind::Word &&
      words[1].kind == WordKind::Word) {
    ParsedName p;
    p.template_id = Template::SurnameFirst;
    p.truncated = truncated;
    append_tokens(p.surname_tokens, words[0].text);
    append_tokens(p.given_tokens, words[1].text);
    push_unique(out, std::move(p));
  }
  return out;
}

namespace {

// Split one handle segment on camelCase boundaries: lower->Upper starts a
// new piece, and an upper-run followed by lower keeps its last letter for
// the next piece ("MCSilva" -> "MC", "Silva").
std::vector<std::string> split_camel(const std::string& seg) {
  std::vector<std::string> pieces;
  std::string cur;
  for (std::size_t i = 0; i < seg.size(); ++i) {
    char c = seg[i];
    bool boundary = false;
    if (!cur.empty() && ascii_upper(c) && !ascii_upper(cur.back())) boundary = true;
    if (!cur.empty() && !ascii_upper(c) && cur.size() >= 2 &&
        ascii_upper(cur.back())) {
      // ...XXx: last upper belongs to the new piece
      char keep = cur.back();
      cur.pop_back();
      pieces.push_back(cur);
      cur.assign(1, keep);
    } else if (boundary) {
      pieces.push_back(cur);
      cur.clear();
    }
    cur += c;
  }
  if (!cur.empty()) pieces.push_back(cur);
  return pieces;
}

}  // namespace

std::vector<ParsedName> parse_handle(const std::string& handle) {
  std::vector<ParsedName> out;

  // segment on underscores and digits, then camelCase within segments
  std::vector<std::string> units;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    for (auto& piece : split_camel(cur)) units.push_back(std::move(piece));
    cur.clear();
  };
  for (char c : handle) {
    if (ascii_alpha(c)) cur += c;
    else flush();
  }
  flush();
  if (units.empty()) return out;

  if (units.size() >= 2) {
    ParsedName p;
    p.template_id = Template::HandleSplit;
    for (std::size_t i = 0; i + 1 < units.size(); ++i) {
      const std::string& u = units[i];
      bool initials_like = u.size() <= 2 && std::all_of(u.begin(), u.end(), [](char c) {
        return ascii_upper(c);
      });
      if (u.size() == 1 || initials_like) {
        for (char c : u) p.initials += static_cast<char>(std::tolower(c));
      } else {
        append_tokens(p.given_tokens, u);
      }
    }
    append_tokens(p.surname_tokens, units.back());
    if (!p.given_tokens.empty() && !p.initials.empty()) {
      std::string lead;
      for (const auto& t : p.given_tokens)
        if (!t.base.empty()) lead += t.base[0];
      p.initials = lead + p.initials;
    }
    push_unique(out, std::move(p));

    // next-to-last unit may belong to the surname ("AnaSanchezGil")
    if (units.size() >= 3 && units[units.size() - 2].size() > 2) {
      ParsedName q;
      q.template_id = Template::HandleSplit;
      for (std::size_t i = 0; i + 2 < units.size(); ++i) {
        const std::string& u = units[i];
        if (u.size() <= 2) {
          for (char c : u) q.initials += static_cast<char>(std::tolower(c));
        } else {
          append_tokens(q.given_tokens, u);
        }
      }
      append_tokens(q.surname_tokens, units[units.size() - 2]);
      append_tokens(q.surname_tokens, units.back());
      if (!q.given_tokens.empty() && !q.initials.empty()) {
        std::string lead;
        for (const auto& t : q.given_tokens)
          if (!t.base.empty()) lead += t.base[0];
        q.initials = lead + q.initials;
      }
      push_unique(out, std::move(q));
    }
    return out;
  }

  // one blob of letters: bare surname, initial+rest, and title-stripped
  // surname hypotheses
  std::string blob = units[0];
  std::transform(blob.begin(), blob.end(), blob.begin(),
                 [](char c) { return static_cast<char>(std::tolower(c)); });
  {
    ParsedName p;
    p.template_id = Template::HandleBare;
    append_tokens(p.surname_tokens, blob);
    push_unique(out, std::move(p));
  }
  if (blob.size() >= 3) {
    ParsedName p;
    p.template_id = Template::HandleInitialRest;
    p.initials.assign(1, blob[0]);
    append_tokens(p.surname_tokens, blob.substr(1));
    push_unique(out, std::move(p));
  }
  for (const char* title : {"dr", "prof"}) {
    std::string t(title);
    if (blob.size() > t.size() + 2 && blob.compare(0, t.size(), t) == 0) {
      ParsedName p;
      p.template_id = Template::HandleBare;
      append_tokens(p.surname_tokens, blob.substr(t.size()));
      push_unique(out, std::move(p));
    }
  }
  return out;
}

NameProfile make_name_profile(const AuthorRecord& author) {
  NameProfile prof;
  prof.surname = strip_titles(normalize(author.surname).tokens);
  if (prof.surname.empty()) prof.surname = normalize(author.surname).tokens;
  if (author.first_name) {
    prof.first = strip_titles(normalize(*author.first_name).tokens);
  }
  for (char c : author.initials) {
    if (ascii_alpha(c)) prof.initials += static_cast<char>(std::tolower(c));
  }
  if (!prof.initials.empty()) prof.first_initial = prof.initials[0];
  else if (!prof.first.empty() && !prof.first[0].base.empty())
    prof.first_initial = prof.first[0].base[0];
  return prof;
}

namespace {

bool sequence_match(const std::vector<Token>& author,
                    const std::vector<Token>& parsed, bool truncated) {
  if (author.empty() || parsed.empty()) return false;
  if (author.size() == parsed.size()) {
    bool ok = true;
    for (std::size_t i = 0; i < author.size(); ++i) {
      bool last = (i + 1 == author.size());
      if (!tokens_match(author[i], parsed[i]) &&
          !(truncated && last && tokens_match_prefix(author[i], parsed[i]))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  // hyphen/space vs. concatenated spellings ("sanchezgil")
  auto a = joined_variants(author, false);
  auto p = joined_variants(parsed, false);
  for (const auto& pv : p) {
    for (const auto& av : a) {
      if (pv == av) return true;
      if (truncated && pv.size() >= 2 && av.size() > pv.size() &&
          av.compare(0, pv.size(), pv) == 0)
        return true;
    }
  }
  return false;
}

bool token_in(const Token& needle, const std::vector<Token>& haystack) {
  return std::any_of(haystack.begin(), haystack.end(),
                     [&](const Token& t) { return tokens_match(needle, t); });
}

// All author tokens appear in order among the parsed tokens.
bool ordered_subsequence(const std::vector<Token>& author,
                         const std::vector<Token>& parsed) {
  std::size_t j = 0;
  for (const auto& a : author) {
    while (j < parsed.size() && !tokens_match(a, parsed[j])) ++j;
    if (j == parsed.size()) return false;
    ++j;
  }
  return true;
}

}  // namespace

MatchEvidence name_compatible(const NameProfile& author, const ParsedName& parsed) {
  MatchEvidence ev;
  ev.surname_match = sequence_match(author.surname, parsed.surname_tokens,
                                    parsed.truncated);

  char parsed_initial = 0;
  if (!parsed.initials.empty()) parsed_initial = parsed.initials[0];
  else if (!parsed.given_tokens.empty() && !parsed.given_tokens[0].base.empty())
    parsed_initial = parsed.given_tokens[0].base[0];
  ev.initial_match = parsed_initial != 0 && parsed_initial == author.first_initial;

  bool has_first = !author.first.empty();
  if (has_first) {
    ev.first_name_match = !parsed.given_tokens.empty() &&
                          ordered_subsequence(author.first, parsed.given_tokens);
    ev.first_single_match =
        !ev.first_name_match && token_in(author.first[0], parsed.given_tokens);
    bool anywhere = false;
    for (const auto& t : author.first) {
      if (token_in(t, parsed.given_tokens) || token_in(t, parsed.surname_tokens)) {
        anywhere = true;
        break;
      }
    }
    ev.author_first_absent = !anywhere;
    ev.full_name_match = ev.surname_match && ev.first_name_match;
  } else {
    // initials-only author: full name is "initials + surname"
    ev.full_name_match = ev.surname_match && parsed.given_tokens.empty() &&
                         !parsed.initials.empty() &&
                         parsed.initials == author.initials;
  }
  return ev;
}

MatchEvidence combine_evidence(const MatchEvidence& a, const MatchEvidence& b) {
  MatchEvidence ev;
  ev.surname_match = a.surname_match || b.surname_match;
  ev.initial_match = a.initial_match || b.initial_match;
  ev.full_name_match = a.full_name_match || b.full_name_match;
  ev.first_name_match = a.first_name_match || b.first_name_match;
  ev.first_single_match = (a.first_single_match || b.first_single_match) &&
                          !(a.first_name_match || b.first_name_match);
  ev.author_first_absent = a.author_first_absent && b.author_first_absent;
  return ev;
}

std::vector<std::string> joined_variants(const std::vector<Token>& tokens,
                                         bool with_space) {
  std::vector<std::string> acc = {""};
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::vector<std::string> next;
    for (const auto& prefix : acc) {
      for (const auto& v : tokens[i].variants) {
        next.push_back(i == 0 || !with_space ? prefix + v : prefix + " " + v);
        if (next.size() >= kMaxJoinedVariants) break;
      }
      if (next.size() >= kMaxJoinedVariants) break;
    }
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end());
  acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
  return acc;
}

}  // namespace scholarmatch::namekit
