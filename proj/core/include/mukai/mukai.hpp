#pragma once

#include "mukai/characters.hpp"
#include "mukai/elliptic.hpp"
#include "mukai/embedding.hpp"
#include "mukai/factorization.hpp"
#include "mukai/fourier_mukai.hpp"
#include "mukai/json_io.hpp"
#include "mukai/lattice.hpp"
#include "mukai/mukai_ring.hpp"
#include "mukai/normal_form.hpp"
#include "mukai/stabilizer.hpp"
