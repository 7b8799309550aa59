#include "mzm/state.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include <json.hpp>

namespace mzm {

GateOp GateOp::rotation(char axis, int qubit, double angle) {
  if (axis != 'x' && axis != 'y' && axis != 'z' && axis != 'h')
    throw std::invalid_argument("GateOp::rotation: unknown axis");
  if (!std::isfinite(angle))
    throw std::invalid_argument("GateOp::rotation: non-finite angle");
  GateOp g;
  g.kind = Kind::Rotation;
  g.axis = axis;
  g.qubit = qubit;
  g.angle = angle;
  return g;
}

GateOp GateOp::cz(int a, int b) {
  GateOp g;
  g.kind = Kind::CZ;
  g.qubit = a;
  g.qubit2 = b;
  return g;
}

GateOp GateOp::hadamard(int qubit) {
  GateOp g;
  g.kind = Kind::Hadamard;
  g.qubit = qubit;
  return g;
}

GateOp GateOp::pauli_gate(PauliString p) {
  GateOp g;
  g.kind = Kind::PauliGate;
  g.pauli = std::move(p);
  return g;
}

GateOp GateOp::global_phase(double angle) {
  GateOp g;
  g.kind = Kind::GlobalPhase;
  g.angle = angle;
  return g;
}

StateVector StateVector::zero(int n_qubits) {
  StateVector s;
  s.n_qubits = n_qubits;
  s.amplitudes = Eigen::VectorXcd::Zero(Eigen::Index(1) << n_qubits);
  s.amplitudes(0) = 1.0;
  return s;
}

DensityMatrix DensityMatrix::from_state(const StateVector& s) {
  DensityMatrix dm;
  dm.n_qubits = s.n_qubits;
  dm.entries = s.amplitudes * s.amplitudes.adjoint();
  return dm;
}

namespace {

void check_qubit(const StateVector& s, int q, const char* who) {
  if (q < 1 || q > s.n_qubits) throw std::out_of_range(std::string(who) + ": qubit out of range");
}

// Applies a 2x2 matrix to `qubit` in place.
void apply_single(StateVector& s, int qubit, const Eigen::Matrix2cd& m) {
  const Eigen::Index dim = s.amplitudes.size();
  const Eigen::Index stride = Eigen::Index(1) << (s.n_qubits - qubit);
  for (Eigen::Index base = 0; base < dim; base += stride * 2) {
    for (Eigen::Index off = 0; off < stride; ++off) {
      const Eigen::Index i0 = base + off;
      const Eigen::Index i1 = i0 + stride;
      const std::complex<double> a0 = s.amplitudes(i0);
      const std::complex<double> a1 = s.amplitudes(i1);
      s.amplitudes(i0) = m(0, 0) * a0 + m(0, 1) * a1;
      s.amplitudes(i1) = m(1, 0) * a0 + m(1, 1) * a1;
    }
  }
}

Eigen::Matrix2cd rotation_matrix(char axis, double theta) {
  const std::complex<double> i1(0.0, 1.0);
  Eigen::Matrix2cd a;
  switch (axis) {
    case 'x': a << 0, 1, 1, 0; break;
    case 'y': a << 0, -i1, i1, 0; break;
    case 'z': a << 1, 0, 0, -1; break;
    case 'h': {
      const double r = 1.0 / std::sqrt(2.0);
      a << r, r, r, -r;
      break;
    }
    default: throw std::invalid_argument("rotation_matrix: unknown axis");
  }
  return std::cos(theta / 2.0) * Eigen::Matrix2cd::Identity() +
         i1 * std::sin(theta / 2.0) * a;
}

}  // namespace

StateVector apply(const StateVector& state, const GateOp& gate) {
  StateVector s = state;
  switch (gate.kind) {
    case GateOp::Kind::Rotation: {
      check_qubit(s, gate.qubit, "apply(rotation)");
      apply_single(s, gate.qubit, rotation_matrix(gate.axis, gate.angle));
      break;
    }
    case GateOp::Kind::Hadamard: {
      check_qubit(s, gate.qubit, "apply(hadamard)");
      const double r = 1.0 / std::sqrt(2.0);
      Eigen::Matrix2cd h;
      h << r, r, r, -r;
      apply_single(s, gate.qubit, h);
      break;
    }
    case GateOp::Kind::CZ: {
      check_qubit(s, gate.qubit, "apply(cz)");
      check_qubit(s, gate.qubit2, "apply(cz)");
      if (gate.qubit == gate.qubit2) throw std::invalid_argument("apply(cz): equal qubits");
      const Eigen::Index m1 = Eigen::Index(1) << (s.n_qubits - gate.qubit);
      const Eigen::Index m2 = Eigen::Index(1) << (s.n_qubits - gate.qubit2);
      for (Eigen::Index b = 0; b < s.amplitudes.size(); ++b)
        if ((b & m1) && (b & m2)) s.amplitudes(b) = -s.amplitudes(b);
      break;
    }
    case GateOp::Kind::PauliGate: {
      const PauliString& p = *gate.pauli;
      if (static_cast<int>(p.num_qubits()) != s.n_qubits)
        throw std::invalid_argument("apply(pauli): size mismatch");
      const std::complex<double> i1(0.0, 1.0);
      Eigen::VectorXcd out(s.amplitudes.size());
      // basis |b> maps to phase(b) |b ^ flip>
      Eigen::Index flip = 0;
      for (int q = 1; q <= s.n_qubits; ++q) {
        const Pauli f = p.factors[static_cast<std::size_t>(q - 1)];
        if (f == Pauli::X || f == Pauli::Y) flip |= Eigen::Index(1) << (s.n_qubits - q);
      }
      for (Eigen::Index b = 0; b < s.amplitudes.size(); ++b) {
        std::complex<double> ph = p.phase.value();
        for (int q = 1; q <= s.n_qubits; ++q) {
          const Pauli f = p.factors[static_cast<std::size_t>(q - 1)];
          const bool bit = (b >> (s.n_qubits - q)) & 1;
          if (f == Pauli::Y) ph *= bit ? -i1 : i1;
          else if (f == Pauli::Z && bit) ph = -ph;
        }
        out(b ^ flip) = ph * s.amplitudes(b);
      }
      s.amplitudes.swap(out);
      break;
    }
    case GateOp::Kind::GlobalPhase: {
      s.amplitudes *= std::exp(std::complex<double>(0.0, gate.angle));
      break;
    }
  }
  return s;
}

StateVector apply_all(const StateVector& state, const std::vector<GateOp>& gates) {
  StateVector s = state;
  for (const GateOp& g : gates) s = apply(s, g);
  return s;
}

StateVector project(const StateVector& state, int qubit, int outcome) {
  check_qubit(state, qubit, "project");
  if (outcome != 0 && outcome != 1) throw std::invalid_argument("project: outcome must be 0/1");
  StateVector s = state;
  const Eigen::Index mask = Eigen::Index(1) << (s.n_qubits - qubit);
  for (Eigen::Index b = 0; b < s.amplitudes.size(); ++b)
    if (static_cast<int>((b & mask) != 0) != outcome) s.amplitudes(b) = 0.0;
  return s;
}

double expectation(const StateVector& state, const PauliString& p) {
  if (!p.is_hermitian())
    throw std::invalid_argument("expectation: PauliString is not Hermitian");
  const StateVector ps = apply(state, GateOp::pauli_gate(p));
  return state.amplitudes.dot(ps.amplitudes).real();
}

namespace {

DensityMatrix partial_trace_impl(int n_qubits,
                                 const std::vector<int>& keep,
                                 const std::function<std::complex<double>(Eigen::Index, Eigen::Index)>& rho,
                                 bool from_state, const Eigen::VectorXcd* amps) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  std::vector<bool> kept(static_cast<std::size_t>(n_qubits) + 1, false);
  for (int q : keep) {
    if (q < 1 || q > n_qubits) throw std::out_of_range("partial_trace: qubit out of range");
    kept[static_cast<std::size_t>(q)] = true;
  }
  std::vector<int> rest;
  for (int q = 1; q <= n_qubits; ++q)
    if (!kept[static_cast<std::size_t>(q)]) rest.push_back(q);

  const int nk = static_cast<int>(keep.size());
  const int nr = static_cast<int>(rest.size());
  const Eigen::Index dk = Eigen::Index(1) << nk;
  const Eigen::Index dr = Eigen::Index(1) << nr;

  // Builds the full basis index from packed keep / rest sub-indices; bit 0 of
  // a packed index is the last listed qubit.
  auto full_index = [&](Eigen::Index k, Eigen::Index r) {
    Eigen::Index b = 0;
    for (int i = 0; i < nk; ++i)
      if ((k >> (nk - 1 - i)) & 1) b |= Eigen::Index(1) << (n_qubits - keep[static_cast<std::size_t>(i)]);
    for (int i = 0; i < nr; ++i)
      if ((r >> (nr - 1 - i)) & 1) b |= Eigen::Index(1) << (n_qubits - rest[static_cast<std::size_t>(i)]);
    return b;
  };

  DensityMatrix out;
  out.n_qubits = nk;
  out.entries = Eigen::MatrixXcd::Zero(dk, dk);
  for (Eigen::Index r = 0; r < dr; ++r) {
    for (Eigen::Index k1 = 0; k1 < dk; ++k1) {
      const Eigen::Index b1 = full_index(k1, r);
      for (Eigen::Index k2 = 0; k2 < dk; ++k2) {
        const Eigen::Index b2 = full_index(k2, r);
        out.entries(k1, k2) +=
            from_state ? (*amps)(b1) * std::conj((*amps)(b2)) : rho(b1, b2);
      }
    }
  }
  return out;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& dm, const std::vector<int>& keep) {
  return partial_trace_impl(
      dm.n_qubits, keep,
      [&dm](Eigen::Index a, Eigen::Index b) { return dm.entries(a, b); }, false,
      nullptr);
}

DensityMatrix partial_trace(const StateVector& state, const std::vector<int>& keep) {
  return partial_trace_impl(state.n_qubits, keep, {}, true, &state.amplitudes);
}

Eigen::MatrixXcd circuit_unitary(int n_qubits, const std::vector<GateOp>& gates) {
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  Eigen::MatrixXcd u(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    StateVector s;
    s.n_qubits = n_qubits;
    s.amplitudes = Eigen::VectorXcd::Zero(dim);
    s.amplitudes(col) = 1.0;
    s = apply_all(s, gates);
    u.col(col) = s.amplitudes;
  }
  return u;
}

std::string density_matrix_json(const DensityMatrix& dm, int indent) {
  nlohmann::ordered_json j;
  j["n_qubits"] = dm.n_qubits;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Eigen::Index r = 0; r < dm.entries.rows(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index c = 0; c < dm.entries.cols(); ++c) {
      row.push_back({{"re", dm.entries(r, c).real()}, {"im", dm.entries(r, c).imag()}});
    }
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j.dump(indent);
}

}  // namespace mzm
