#include "lsd/chain.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace lsd {

void validate(const LsdRule& rule) {
  if (rule.minor < 1)
    throw std::invalid_argument("rule requires minor reflection size >= 1");
  if (rule.major <= rule.minor)
    throw std::invalid_argument("rule requires major > minor reflection size");
}

Chain::Chain(std::vector<Symbol> symbols, std::vector<ReflectionAxis> axes)
    : symbols_(std::move(symbols)), axes_(std::move(axes)) {
  for (const ReflectionAxis& a : axes_) {
    if (a.position < a.size || a.position + a.size > symbols_.size())
      throw std::invalid_argument("reflection axis outside chain bounds");
    for (std::size_t i = 0; i < a.size; ++i)
      if (symbols_[a.position - 1 - i] != symbols_[a.position + i])
        throw std::invalid_argument("reflection axis violates mirror property");
  }
}

Chain Chain::from_string(std::string_view text) {
  std::vector<Symbol> symbols;
  // Letters are the common case; fall back to decimal ids when the text
  // contains digits or separators.
  const bool lettered = std::all_of(text.begin(), text.end(), [](unsigned char c) {
    return std::isupper(c) || std::isspace(c);
  });
  if (lettered) {
    for (unsigned char c : text) {
      if (std::isspace(c)) continue;
      symbols.push_back(Symbol{c - 'A'});
    }
    return Chain(std::move(symbols));
  }
  const char* p = text.data();
  const char* end = text.data() + text.size();
  while (p != end) {
    if (std::isspace(static_cast<unsigned char>(*p)) || *p == ',') {
      ++p;
      continue;
    }
    int id = 0;
    auto [next, ec] = std::from_chars(p, end, id);
    if (ec != std::errc() || id < 0)
      throw std::invalid_argument("chain text is neither letters nor decimal ids");
    symbols.push_back(Symbol{id});
    p = next;
  }
  return Chain(std::move(symbols));
}

int Chain::alphabet_size() const noexcept {
  int max_id = -1;
  for (Symbol s : symbols_) max_id = std::max(max_id, s.id);
  return max_id + 1;
}

void Chain::extend_with_reflection(std::size_t k) {
  if (k > symbols_.size())
    throw std::invalid_argument("reflection exceeds chain");
  const std::size_t pos = symbols_.size();
  symbols_.reserve(pos + k);
  for (std::size_t i = 0; i < k; ++i) symbols_.push_back(symbols_[pos - 1 - i]);
  axes_.push_back(ReflectionAxis{pos, k});
}

Chain apply_reflection(const Chain& chain, std::size_t k) {
  Chain out = chain;
  out.extend_with_reflection(k);
  return out;
}

Chain generate(const Chain& seed, const LsdRule& rule, std::size_t target_length) {
  validate(rule);
  if (seed.size() < static_cast<std::size_t>(rule.major))
    throw std::invalid_argument("seed shorter than the major reflection size");
  if (target_length < seed.size())
    throw std::invalid_argument("target length shorter than the seed");

  Chain out = seed;
  out.reserve(target_length + rule.major);
  bool use_major = true;
  while (out.size() < target_length) {
    out.extend_with_reflection(use_major ? rule.major : rule.minor);
    use_major = !use_major;
  }
  return out;
}

Chain prefix(const Chain& chain, std::size_t length) {
  if (length >= chain.size()) return chain;
  std::vector<Symbol> symbols(chain.symbols().begin(),
                              chain.symbols().begin() + length);
  std::vector<ReflectionAxis> axes;
  for (const ReflectionAxis& a : chain.axes())
    if (a.position + a.size <= length) axes.push_back(a);
  return Chain(std::move(symbols), std::move(axes));
}

std::string to_string(Symbol symbol, int alphabet_size) {
  if (alphabet_size <= 26 && symbol.id < 26)
    return std::string(1, static_cast<char>('A' + symbol.id));
  return std::to_string(symbol.id);
}

std::string to_string(const Chain& chain) {
  const int alphabet = chain.alphabet_size();
  std::string out;
  if (alphabet <= 26) {
    out.reserve(chain.size());
    for (Symbol s : chain.symbols()) out.push_back(static_cast<char>('A' + s.id));
    return out;
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(chain[i].id);
  }
  return out;
}

}  // namespace lsd
