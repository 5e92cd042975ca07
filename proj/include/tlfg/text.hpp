// tlfg -- Turkish text utilities: UTF-8 code points, orthography
// normalization, phonological classification and the legacy ASCII
// transliteration (ı=I, ü=U, ç=C, ş=S, ö=O, ğ=G).
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tlfg::text {

// -- minimal UTF-8 codec -----------------------------------------------

inline std::vector<char32_t> decode_utf8(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    unsigned char b = static_cast<unsigned char>(s[i]);
    char32_t cp = 0;
    std::size_t len = 1;
    if (b < 0x80) {
      cp = b;
    } else if ((b & 0xE0) == 0xC0) {
      cp = b & 0x1F;
      len = 2;
    } else if ((b & 0xF0) == 0xE0) {
      cp = b & 0x0F;
      len = 3;
    } else if ((b & 0xF8) == 0xF0) {
      cp = b & 0x07;
      len = 4;
    } else {
      throw std::invalid_argument("invalid UTF-8 lead byte");
    }
    if (i + len > s.size()) throw std::invalid_argument("truncated UTF-8 sequence");
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char cb = static_cast<unsigned char>(s[i + k]);
      if ((cb & 0xC0) != 0x80) throw std::invalid_argument("invalid UTF-8 continuation");
      cp = (cp << 6) | (cb & 0x3F);
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string encode_utf8(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size() * 2);
  for (char32_t cp : cps) append_utf8(out, cp);
  return out;
}

// -- Turkish letters ----------------------------------------------------

// lowercase specials
inline constexpr char32_t kCCedil = 0x00E7;   // ç
inline constexpr char32_t kGBreve = 0x011F;   // ğ
inline constexpr char32_t kDotlessI = 0x0131; // ı
inline constexpr char32_t kODia = 0x00F6;     // ö
inline constexpr char32_t kSCedil = 0x015F;   // ş
inline constexpr char32_t kUDia = 0x00FC;     // ü
// uppercase specials
inline constexpr char32_t kCCedilU = 0x00C7;  // Ç
inline constexpr char32_t kGBreveU = 0x011E;  // Ğ
inline constexpr char32_t kDottedIU = 0x0130; // İ
inline constexpr char32_t kODiaU = 0x00D6;    // Ö
inline constexpr char32_t kSCedilU = 0x015E;  // Ş
inline constexpr char32_t kUDiaU = 0x00DC;    // Ü

inline bool is_vowel(char32_t c) {
  switch (c) {
    case U'a': case U'e': case U'i': case U'o': case U'u':
    case kDotlessI: case kODia: case kUDia:
      return true;
    default:
      return false;
  }
}

inline bool is_back_vowel(char32_t c) {
  return c == U'a' || c == kDotlessI || c == U'o' || c == U'u';
}

inline bool is_rounded_vowel(char32_t c) {
  return c == U'o' || c == U'u' || c == kODia || c == kUDia;
}

// word-final devoicing context: voiceless consonants trigger D -> t
inline bool is_voiceless_consonant(char32_t c) {
  switch (c) {
    case kCCedil: case U'f': case U'h': case U'k': case U'p':
    case U's': case kSCedil: case U't':
      return true;
    default:
      return false;
  }
}

// Returns 0 if the stem contains no vowel.
inline char32_t last_vowel(const std::vector<char32_t>& cps) {
  for (auto it = cps.rbegin(); it != cps.rend(); ++it)
    if (is_vowel(*it)) return *it;
  return 0;
}

inline bool has_vowel(std::string_view s) { return last_vowel(decode_utf8(s)) != 0; }

// Voiced counterpart used by the stem-final alternation flag (çocuk~çocuğ).
inline char32_t soften_consonant(char32_t c) {
  switch (c) {
    case U'k': return kGBreve;
    case U'p': return U'b';
    case U't': return U'd';
    case kCCedil: return U'c';
    default: return c;
  }
}

// -- normalization ------------------------------------------------------

namespace detail {

inline bool is_upper(char32_t c) {
  if (c >= U'A' && c <= U'Z') return true;
  switch (c) {
    case kCCedilU: case kGBreveU: case kDottedIU:
    case kODiaU: case kSCedilU: case kUDiaU:
      return true;
    default:
      return false;
  }
}

// Turkish-orthography lowercase: I -> ı, İ -> i, never locale tolower.
inline char32_t lower_orthographic(char32_t c) {
  switch (c) {
    case U'I': return kDotlessI;
    case kDottedIU: return U'i';
    case kCCedilU: return kCCedil;
    case kGBreveU: return kGBreve;
    case kODiaU: return kODia;
    case kSCedilU: return kSCedil;
    case kUDiaU: return kUDia;
    default:
      if (c >= U'A' && c <= U'Z') return c + 0x20;
      return c;
  }
}

// Legacy ASCII convention: capitals stand for special letters.
inline char32_t lower_ascii_convention(char32_t c) {
  switch (c) {
    case U'I': return kDotlessI;
    case U'U': return kUDia;
    case U'C': return kCCedil;
    case U'S': return kSCedil;
    case U'O': return kODia;
    case U'G': return kGBreve;
    default: return lower_orthographic(c);
  }
}

}  // namespace detail

// Maps a surface word to canonical lowercase Turkish. Words with an
// uppercase letter in non-initial position are read in the legacy ASCII
// convention ("kIrmIzI", "gittikCe"); otherwise capitals are ordinary
// sentence-initial orthography ("Onların", "İyi").
inline std::string normalize_word(std::string_view word) {
  auto cps = decode_utf8(word);
  bool internal_upper = false;
  for (std::size_t i = 1; i < cps.size(); ++i)
    if (detail::is_upper(cps[i])) internal_upper = true;
  for (auto& c : cps)
    c = internal_upper ? detail::lower_ascii_convention(c) : detail::lower_orthographic(c);
  return encode_utf8(cps);
}

// Canonical lowercase -> legacy ASCII transliteration used for output.
inline std::string to_ascii(std::string_view s) {
  auto cps = decode_utf8(s);
  std::string out;
  for (char32_t c : cps) {
    switch (c) {
      case kDotlessI: out.push_back('I'); break;
      case kUDia: out.push_back('U'); break;
      case kCCedil: out.push_back('C'); break;
      case kSCedil: out.push_back('S'); break;
      case kODia: out.push_back('O'); break;
      case kGBreve: out.push_back('G'); break;
      default: append_utf8(out, c);
    }
  }
  return out;
}

}  // namespace tlfg::text
