// Prints the two built-in derivation chains, one for the classical
// conjunction and one for a graded superposition, and replays both
// through the independent trace verifier.

#include <iostream>

#include "qmeta/qmeta.hpp"

int main() {
  using namespace qmeta;

  DerivationTrace classical = derive_classical_defeq("A", "B");
  std::cout << "classical conjunction:\n" << classical.rendered() << "\n";

  DerivationTrace quantum =
      derive_quantum_defeq(Complex(0.6, 0.0), Complex(0.0, 0.8));
  std::cout << "graded superposition:\n" << quantum.rendered() << "\n";

  VerifyResult a = verify(classical);
  VerifyResult b = verify(quantum);
  if (!a.ok || !b.ok) {
    const VerifyResult& bad = a.ok ? b : a;
    std::cout << "verifier rejected line " << bad.line << ": " << bad.reason
              << "\n";
    return 1;
  }
  std::cout << "verifier: both chains check\n";
  return 0;
}
