// Classifies a list of filling fractions: exclusion parameter, universal
// class, dual partner. Pass fractions as arguments or run bare for a demo
// set.

#include <cstdio>
#include <string>
#include <vector>

#include <fracton/fracton.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> inputs;
  for (int i = 1; i < argc; ++i) inputs.emplace_back(argv[i]);
  if (inputs.empty())
    inputs = {"1/3", "2/5", "3/7", "1/2", "4/7", "3/5", "2/3"};

  for (const std::string& text : inputs) {
    const fracton::Ratio nu = fracton::Ratio::parse(text);
    if (nu <= fracton::Ratio(0) || nu.den() == 1) {
      std::printf("%s: skipped (need a positive non-integer fraction)\n",
                  text.c_str());
      continue;
    }
    const fracton::UniversalClass cls =
        fracton::class_members(fracton::spectrum_h(nu), 4);
    const fracton::DualPair dual = fracton::dual_filling(nu);

    std::string members;
    for (const fracton::Ratio& m : cls.members) {
      if (!members.empty()) members += ", ";
      members += m.str();
    }
    std::printf("nu = %-5s  h = %-5s  dual nu = %-5s  class {%s}\n",
                nu.str().c_str(), cls.h.str().c_str(),
                dual.nu_dual.str().c_str(), members.c_str());
  }
  return 0;
}
