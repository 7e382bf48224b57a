#pragma once

#include "hlc/types.hpp"

// Small fixed types and sequents used across tests, the acceptance suite and the CLI.
namespace hlc::samples {

Type p();  // p#2
Type q();  // q#0
Type r();  // r#1
Type s();  // s#1
Type t();  // t#2

Type A1();
Type A2();
Type A3();
Type A4();

// A2, p, A3 over four nodes -> A4
Sequent derivation_example();
// two unary p-edges on two nodes, first node external -> p#1
Sequent y_graph();
// three edges labeled T1 = ×(p reversed) ∨ p, T2 = ÷(q#2 / p then $), T2 -> ×(q ∥ T2)
Sequent hmalc_example();

}  // namespace hlc::samples
