#include "smfp/porter.hpp"

#include <cstring>

namespace smfp {
namespace {

// Working state for one stemming run. b holds the word; k is the index of
// its current last character; j marks the start of a candidate suffix after
// a successful ends() probe. Mirrors the classic C layout.
struct Stemmer {
  std::string b;
  int j = 0;
  int k = 0;

  // True if b[i] is a consonant. 'y' is a consonant at the word start and
  // after a vowel, a vowel after a consonant.
  bool cons(int i) const {
    switch (b[static_cast<std::size_t>(i)]) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        return false;
      case 'y':
        return (i == 0) ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // Number of consonant-vowel sequences ("measure") in b[0..j].
  int m() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i > j) return n;
      if (!cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i > j) return n;
        if (cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i > j) return n;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (int i = 0; i <= j; ++i) {
      if (!cons(i)) return true;
    }
    return false;
  }

  // b[i-1..i] is a double consonant.
  bool doublec(int i) const {
    if (i < 1) return false;
    if (b[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i - 1)]) return false;
    return cons(i);
  }

  // b[i-2..i] is consonant-vowel-consonant where the final consonant is not
  // w, x or y. Gates the restore-final-e rules.
  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    const char ch = b[static_cast<std::size_t>(i)];
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  // True if b[0..k] ends with s; on success j is set to the stem end.
  bool ends(const char* s) {
    const int len = static_cast<int>(std::strlen(s));
    if (s[len - 1] != b[static_cast<std::size_t>(k)]) return false;
    if (len > k + 1) return false;
    if (b.compare(static_cast<std::size_t>(k - len + 1), static_cast<std::size_t>(len), s) != 0) {
      return false;
    }
    j = k - len;
    return true;
  }

  // Replace the suffix after j with s. Text beyond the new end is dead.
  void setto(const char* s) {
    b.erase(static_cast<std::size_t>(j + 1));
    b += s;
    k = static_cast<int>(b.size()) - 1;
  }

  void r(const char* s) {
    if (m() > 0) setto(s);
  }

  // Plurals and -ed / -ing. caresses -> caress, ponies -> poni, feed -> feed,
  // agreed -> agree, plastered -> plaster, motoring -> motor.
  void step1ab() {
    if (b[static_cast<std::size_t>(k)] == 's') {
      if (ends("sses")) {
        k -= 2;
      } else if (ends("ies")) {
        setto("i");
      } else if (k >= 1 && b[static_cast<std::size_t>(k - 1)] != 's') {
        --k;
      }
    }
    if (ends("eed")) {
      if (m() > 0) --k;
    } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      k = j;
      if (ends("at")) {
        setto("ate");
      } else if (ends("bl")) {
        setto("ble");
      } else if (ends("iz")) {
        setto("ize");
      } else if (doublec(k)) {
        --k;
        const char ch = b[static_cast<std::size_t>(k)];
        if (ch == 'l' || ch == 's' || ch == 'z') ++k;
      } else if (m() == 1 && cvc(k)) {
        setto("e");
      }
    }
  }

  // Terminal y -> i when there is another vowel in the stem.
  void step1c() {
    if (ends("y") && vowel_in_stem()) {
      b[static_cast<std::size_t>(k)] = 'i';
    }
  }

  // Double suffixes -> single ones when m() > 0, e.g. -ization -> -ize.
  void step2() {
    if (k < 1) return;
    switch (b[static_cast<std::size_t>(k - 1)]) {
      case 'a':
        if (ends("ational")) { r("ate"); break; }
        if (ends("tional")) { r("tion"); break; }
        break;
      case 'c':
        if (ends("enci")) { r("ence"); break; }
        if (ends("anci")) { r("ance"); break; }
        break;
      case 'e':
        if (ends("izer")) { r("ize"); break; }
        break;
      case 'l':
        if (ends("bli")) { r("ble"); break; }
        if (ends("alli")) { r("al"); break; }
        if (ends("entli")) { r("ent"); break; }
        if (ends("eli")) { r("e"); break; }
        if (ends("ousli")) { r("ous"); break; }
        break;
      case 'o':
        if (ends("ization")) { r("ize"); break; }
        if (ends("ation")) { r("ate"); break; }
        if (ends("ator")) { r("ate"); break; }
        break;
      case 's':
        if (ends("alism")) { r("al"); break; }
        if (ends("iveness")) { r("ive"); break; }
        if (ends("fulness")) { r("ful"); break; }
        if (ends("ousness")) { r("ous"); break; }
        break;
      case 't':
        if (ends("aliti")) { r("al"); break; }
        if (ends("iviti")) { r("ive"); break; }
        if (ends("biliti")) { r("ble"); break; }
        break;
      case 'g':
        if (ends("logi")) { r("log"); break; }
        break;
      default:
        break;
    }
  }

  // -ic-, -full, -ness and friends, same m() > 0 gate.
  void step3() {
    switch (b[static_cast<std::size_t>(k)]) {
      case 'e':
        if (ends("icate")) { r("ic"); break; }
        if (ends("ative")) { r(""); break; }
        if (ends("alize")) { r("al"); break; }
        break;
      case 'i':
        if (ends("iciti")) { r("ic"); break; }
        break;
      case 'l':
        if (ends("ical")) { r("ic"); break; }
        if (ends("ful")) { r(""); break; }
        break;
      case 's':
        if (ends("ness")) { r(""); break; }
        break;
      default:
        break;
    }
  }

  // Drop -ant, -ence etc. when m() > 1.
  void step4() {
    if (k < 1) return;
    switch (b[static_cast<std::size_t>(k - 1)]) {
      case 'a':
        if (ends("al")) break;
        return;
      case 'c':
        if (ends("ance")) break;
        if (ends("ence")) break;
        return;
      case 'e':
        if (ends("er")) break;
        return;
      case 'i':
        if (ends("ic")) break;
        return;
      case 'l':
        if (ends("able")) break;
        if (ends("ible")) break;
        return;
      case 'n':
        if (ends("ant")) break;
        if (ends("ement")) break;
        if (ends("ment")) break;
        if (ends("ent")) break;
        return;
      case 'o':
        if (ends("ion") && j >= 0 &&
            (b[static_cast<std::size_t>(j)] == 's' || b[static_cast<std::size_t>(j)] == 't')) {
          break;
        }
        if (ends("ou")) break;  // takes care of -ous
        return;
      case 's':
        if (ends("ism")) break;
        return;
      case 't':
        if (ends("ate")) break;
        if (ends("iti")) break;
        return;
      case 'u':
        if (ends("ous")) break;
        return;
      case 'v':
        if (ends("ive")) break;
        return;
      case 'z':
        if (ends("ize")) break;
        return;
      default:
        return;
    }
    if (m() > 1) k = j;
  }

  // Remove a final -e if m() > 1, and change -ll to -l if m() > 1.
  void step5() {
    j = k;
    if (b[static_cast<std::size_t>(k)] == 'e') {
      const int a = m();
      if (a > 1 || (a == 1 && !cvc(k - 1))) --k;
    }
    if (b[static_cast<std::size_t>(k)] == 'l' && doublec(k) && m() > 1) --k;
  }
};

}  // namespace

std::string porter_stem(std::string_view word) {
  if (word.size() <= 2) {
    return std::string(word);
  }
  Stemmer s;
  s.b.assign(word);
  s.k = static_cast<int>(s.b.size()) - 1;
  s.step1ab();
  s.step1c();
  s.step2();
  s.step3();
  s.step4();
  s.step5();
  return s.b.substr(0, static_cast<std::size_t>(s.k + 1));
}

}  // namespace smfp
