#pragma once

// Generated by tests/oracles/generate.py from exact rational polynomials
// and 80-digit mpmath arithmetic. Do not edit by hand.

namespace oracle {

struct PointValue {
  int l;
  int m;
  double x;
  double value;
};

// U_lm(x) by Rodrigues' formula, l <= 8.
inline constexpr PointValue kU[] = {
    {0, 0, -1.0, 0.7071067811865476},
    {0, 0, -0.5, 0.7071067811865476},
    {0, 0, 0.0, 0.7071067811865476},
    {0, 0, 0.123, 0.7071067811865476},
    {0, 0, 0.5, 0.7071067811865476},
    {0, 0, 1.0, 0.7071067811865476},
    {1, -1, -1.0, 0.0},
    {1, -1, -0.5, 0.75},
    {1, -1, 0.0, 0.8660254037844386},
    {1, -1, 0.123, 0.8594493876895835},
    {1, -1, 0.5, 0.75},
    {1, -1, 1.0, 0.0},
    {1, 0, -1.0, -1.224744871391589},
    {1, 0, -0.5, -0.6123724356957945},
    {1, 0, 0.0, 0.0},
    {1, 0, 0.123, 0.15064361918116545},
    {1, 0, 0.5, 0.6123724356957945},
    {1, 0, 1.0, 1.224744871391589},
    {1, 1, -1.0, 0.0},
    {1, 1, -0.5, -0.75},
    {1, 1, 0.0, -0.8660254037844386},
    {1, 1, 0.123, -0.8594493876895835},
    {1, 1, 0.5, -0.75},
    {1, 1, 1.0, 0.0},
    {2, -2, -1.0, 0.0},
    {2, -2, -0.5, 0.7261843774138906},
    {2, -2, 0.0, 0.9682458365518543},
    {2, -2, 0.123, 0.9535972452906613},
    {2, -2, 0.5, 0.7261843774138906},
    {2, -2, 1.0, 0.0},
    {2, -1, -1.0, 0.0},
    {2, -1, -0.5, -0.8385254915624212},
    {2, -1, 0.0, 0.0},
    {2, -1, 0.123, 0.236379832253621},
    {2, -1, 0.5, 0.8385254915624212},
    {2, -1, 1.0, 0.0},
    {2, 0, -1.0, 1.5811388300841898},
    {2, 0, -0.5, -0.19764235376052372},
    {2, 0, 0.0, -0.7905694150420949},
    {2, 0, 0.123, -0.7546878410015793},
    {2, 0, 0.5, -0.19764235376052372},
    {2, 0, 1.0, 1.5811388300841898},
    {2, 1, -1.0, 0.0},
    {2, 1, -0.5, 0.8385254915624212},
    {2, 1, 0.0, 0.0},
    {2, 1, 0.123, -0.236379832253621},
    {2, 1, 0.5, -0.8385254915624212},
    {2, 1, 1.0, 0.0},
    {2, 2, -1.0, 0.0},
    {2, 2, -0.5, 0.7261843774138906},
    {2, 2, 0.0, 0.9682458365518543},
    {2, 2, 0.123, 0.9535972452906613},
    {2, 2, 0.5, 0.7261843774138906},
    {2, 2, 1.0, 0.0},
    {3, -3, -1.0, 0.0},
    {3, -3, -0.5, 0.6792832849776299},
    {3, -3, 0.0, 1.0458250331675945},
    {3, -3, 0.123, 1.0221815961828176},
    {3, -3, 0.5, 0.6792832849776299},
    {3, -3, 1.0, 0.0},
    {3, -2, -1.0, 0.0},
    {3, -2, -0.5, -0.9606516343087124},
    {3, -2, 0.0, 0.0},
    {3, -2, 0.123, 0.3103266829205079},
    {3, -2, 0.5, 0.9606516343087124},
    {3, -2, 1.0, 0.0},
    {3, -1, -1.0, 0.0},
    {3, -1, -0.5, 0.1753901900050285},
    {3, -1, 0.0, -0.8100925873009825},
    {3, -1, 0.123, -0.7431271488086966},
    {3, -1, 0.5, 0.1753901900050285},
    {3, -1, 1.0, 0.0},
    {3, 0, -1.0, -1.8708286933869707},
    {3, 0, -0.5, 0.8184875533567997},
    {3, 0, 0.0, 0.0},
    {3, 0, 0.123, -0.33646448548445373},
    {3, 0, 0.5, -0.8184875533567997},
    {3, 0, 1.0, 1.8708286933869707},
    {3, 1, -1.0, 0.0},
    {3, 1, -0.5, -0.1753901900050285},
    {3, 1, 0.0, 0.8100925873009825},
    {3, 1, 0.123, 0.7431271488086966},
    {3, 1, 0.5, -0.1753901900050285},
    {3, 1, 1.0, 0.0},
    {3, 2, -1.0, 0.0},
    {3, 2, -0.5, -0.9606516343087124},
    {3, 2, 0.0, 0.0},
    {3, 2, 0.123, 0.3103266829205079},
    {3, 2, 0.5, 0.9606516343087124},
    {3, 2, 1.0, 0.0},
    {3, 3, -1.0, 0.0},
    {3, 3, -0.5, -0.6792832849776299},
    {3, 3, 0.0, -1.0458250331675945},
    {3, 3, 0.123, -1.0221815961828176},
    {3, 3, 0.5, -0.6792832849776299},
    {3, 3, 1.0, 0.0},
    {4, -4, -1.0, 0.0},
    {4, -4, -0.5, 0.6239615396237876},
    {4, -4, 0.0, 1.109264959331178},
    {4, -4, 0.123, 1.0759547161222556},
    {4, -4, 0.5, 0.6239615396237876},
    {4, -4, 1.0, 0.0},
    {4, -3, -1.0, 0.0},
    {4, -3, -0.5, -1.018924927466445},
    {4, -3, 0.0, 0.0},
    {4, -3, 0.123, 0.3771850089914597},
    {4, -3, 0.5, 1.018924927466445},
    {4, -3, 1.0, 0.0},
    {4, -2, -1.0, 0.0},
    {4, -2, -0.5, 0.4716705890038619},
    {4, -2, 0.0, -0.8385254915624212},
    {4, -2, 0.123, -0.7383805652497344},
    {4, -2, 0.5, 0.4716705890038619},
    {4, -2, 1.0, 0.0},
    {4, -1, -1.0, 0.0},
    {4, -1, -0.5, 0.6418623720763665},
    {4, -1, 0.0, 0.0},
    {4, -1, 0.123, -0.418927757547011},
    {4, -1, 0.5, -0.6418623720763665},
    {4, -1, 1.0, 0.0},
    {4, 0, -1.0, 2.1213203435596424},
    {4, 0, -0.5, -0.6131941618102091},
    {4, 0, 0.0, 0.795495128834866},
    {4, 0, 0.123, 0.6772689165530993},
    {4, 0, 0.5, -0.6131941618102091},
    {4, 0, 1.0, 2.1213203435596424},
    {4, 1, -1.0, 0.0},
    {4, 1, -0.5, -0.6418623720763665},
    {4, 1, 0.0, 0.0},
    {4, 1, 0.123, 0.418927757547011},
    {4, 1, 0.5, 0.6418623720763665},
    {4, 1, 1.0, 0.0},
    {4, 2, -1.0, 0.0},
    {4, 2, -0.5, 0.4716705890038619},
    {4, 2, 0.0, -0.8385254915624212},
    {4, 2, 0.123, -0.7383805652497344},
    {4, 2, 0.5, 0.4716705890038619},
    {4, 2, 1.0, 0.0},
    {4, 3, -1.0, 0.0},
    {4, 3, -0.5, 1.018924927466445},
    {4, 3, 0.0, 0.0},
    {4, 3, 0.123, -0.3771850089914597},
    {4, 3, 0.5, -1.018924927466445},
    {4, 3, 1.0, 0.0},
    {4, 4, -1.0, 0.0},
    {4, 4, -0.5, 0.6239615396237876},
    {4, 4, 0.0, 1.109264959331178},
    {4, 4, 0.123, 1.0759547161222556},
    {4, 4, 0.5, 0.6239615396237876},
    {4, 4, 1.0, 0.0},
    {5, -5, -1.0, 0.0},
    {5, -5, -0.5, 0.566741212915553},
    {5, -5, 0.0, 1.1634069043116428},
    {5, -5, 0.123, 1.1199019758800248},
    {5, -5, 0.5, 0.566741212915553},
    {5, -5, 1.0, 0.0},
    {5, -4, -1.0, 0.0},
    {5, -4, -0.5, -1.0347231552722886},
    {5, -4, 0.0, 0.0},
    {5, -4, 0.123, 0.43893018442927817},
    {5, -4, 0.5, 1.0347231552722886},
    {5, -4, 1.0, 0.0},
    {5, -3, -1.0, 0.0},
    {5, -3, -0.5, 0.7040399320721435},
    {5, -3, 0.0, -0.8671523078444755},
    {5, -3, 0.123, -0.7321451943222256},
    {5, -3, 0.5, 0.7040399320721435},
    {5, -3, 1.0, 0.0},
    {5, -2, -1.0, 0.0},
    {5, -2, -0.5, 0.39826512815546317},
    {5, -2, 0.0, 0.0},
    {5, -2, 0.123, -0.49126159113125883},
    {5, -2, 0.5, -0.39826512815546317},
    {5, -2, 1.0, 0.0},
    {5, -1, -1.0, 0.0},
    {5, -1, -0.5, -0.8256314721961968},
    {5, -1, 0.0, 0.8028270361665706},
    {5, -1, 0.123, 0.6318081020729732},
    {5, -1, 0.5, -0.8256314721961968},
    {5, -1, 1.0, 0.0},
    {5, 0, -1.0, -2.345207879911715},
    {5, 0, -0.5, -0.21070227046081813},
    {5, 0, 0.0, 0.0},
    {5, 0, 0.123, 0.5031974627954675},
    {5, 0, 0.5, 0.21070227046081813},
    {5, 0, 1.0, 2.345207879911715},
    {5, 1, -1.0, 0.0},
    {5, 1, -0.5, 0.8256314721961968},
    {5, 1, 0.0, -0.8028270361665706},
    {5, 1, 0.123, -0.6318081020729732},
    {5, 1, 0.5, 0.8256314721961968},
    {5, 1, 1.0, 0.0},
    {5, 2, -1.0, 0.0},
    {5, 2, -0.5, 0.39826512815546317},
    {5, 2, 0.0, 0.0},
    {5, 2, 0.123, -0.49126159113125883},
    {5, 2, 0.5, -0.39826512815546317},
    {5, 2, 1.0, 0.0},
    {5, 3, -1.0, 0.0},
    {5, 3, -0.5, -0.7040399320721435},
    {5, 3, 0.0, 0.8671523078444755},
    {5, 3, 0.123, 0.7321451943222256},
    {5, 3, 0.5, -0.7040399320721435},
    {5, 3, 1.0, 0.0},
    {5, 4, -1.0, 0.0},
    {5, 4, -0.5, -1.0347231552722886},
    {5, 4, 0.0, 0.0},
    {5, 4, 0.123, 0.43893018442927817},
    {5, 4, 0.5, 1.0347231552722886},
    {5, 4, 1.0, 0.0},
    {5, 5, -1.0, 0.0},
    {5, 5, -0.5, -0.566741212915553},
    {5, 5, 0.0, -1.1634069043116428},
    {5, 5, 0.123, -1.1199019758800248},
    {5, 5, 0.5, -0.566741212915553},
    {5, 5, 1.0, 0.0},
    {6, -6, -1.0, 0.0},
    {6, -6, -0.5, 0.5108536257714201},
    {6, -6, 0.0, 1.2109122981248477},
    {6, -6, 0.123, 1.1567799134166659},
    {6, -6, 0.5, 0.5108536257714201},
    {6, -6, 1.0, 0.0},
    {6, -5, -1.0, 0.0},
    {6, -5, -0.5, -1.0217072515428403},
    {6, -5, 0.0, 0.0},
    {6, -5, 0.123, 0.49665727169605045},
    {6, -5, 0.5, 1.0217072515428403},
    {6, -5, 1.0, 0.0},
    {6, -4, -1.0, 0.0},
    {6, -4, -0.5, 0.8803442825576305},
    {6, -4, 0.0, -0.8943180013283866},
    {6, -4, 0.123, -0.7231001954334327},
    {6, -4, 0.5, 0.8803442825576305},
    {6, -4, 1.0, 0.0},
    {6, -3, -1.0, 0.0},
    {6, -3, -0.5, 0.1325663360947121},
    {6, -3, 0.0, 0.0},
    {6, -3, 0.123, -0.5562129714886501},
    {6, -3, 0.5, -0.1325663360947121},
    {6, -3, 1.0, 0.0},
    {6, -2, -1.0, 0.0},
    {6, -2, -0.5, -0.8801779130422911},
    {6, -2, 0.0, 0.8163969048508207},
    {6, -2, 0.123, 0.591159485429612},
    {6, -2, 0.5, -0.8801779130422911},
    {6, -2, 1.0, 0.0},
    {6, -1, -1.0, 0.0},
    {6, -1, -0.5, 0.19563206279058457},
    {6, -1, 0.0, 0.0},
    {6, -1, 0.123, 0.5740093229683594},
    {6, -1, 0.5, -0.19563206279058457},
    {6, -1, 1.0, 0.0},
    {6, 0, -1.0, 2.5495097567963922},
    {6, 0, -0.5, 0.8241091108394589},
    {6, 0, 0.0, -0.7967217989988726},
    {6, 0, 0.123, -0.5549572668792907},
    {6, 0, 0.5, 0.8241091108394589},
    {6, 0, 1.0, 2.5495097567963922},
    {6, 1, -1.0, 0.0},
    {6, 1, -0.5, -0.19563206279058457},
    {6, 1, 0.0, 0.0},
    {6, 1, 0.123, -0.5740093229683594},
    {6, 1, 0.5, 0.19563206279058457},
    {6, 1, 1.0, 0.0},
    {6, 2, -1.0, 0.0},
    {6, 2, -0.5, -0.8801779130422911},
    {6, 2, 0.0, 0.8163969048508207},
    {6, 2, 0.123, 0.591159485429612},
    {6, 2, 0.5, -0.8801779130422911},
    {6, 2, 1.0, 0.0},
    {6, 3, -1.0, 0.0},
    {6, 3, -0.5, -0.1325663360947121},
    {6, 3, 0.0, 0.0},
    {6, 3, 0.123, 0.5562129714886501},
    {6, 3, 0.5, 0.1325663360947121},
    {6, 3, 1.0, 0.0},
    {6, 4, -1.0, 0.0},
    {6, 4, -0.5, 0.8803442825576305},
    {6, 4, 0.0, -0.8943180013283866},
    {6, 4, 0.123, -0.7231001954334327},
    {6, 4, 0.5, 0.8803442825576305},
    {6, 4, 1.0, 0.0},
    {6, 5, -1.0, 0.0},
    {6, 5, -0.5, 1.0217072515428403},
    {6, 5, 0.0, 0.0},
    {6, 5, 0.123, -0.49665727169605045},
    {6, 5, 0.5, -1.0217072515428403},
    {6, 5, 1.0, 0.0},
    {6, 6, -1.0, 0.0},
    {6, 6, -0.5, 0.5108536257714201},
    {6, 6, 0.0, 1.2109122981248477},
    {6, 6, 0.123, 1.1567799134166659},
    {6, 6, 0.5, 0.5108536257714201},
    {6, 6, 1.0, 0.0},
    {7, -7, -1.0, 0.0},
    {7, -7, -0.5, 0.4579401515281554},
    {7, -7, 0.0, 1.2534133084800878},
    {7, -7, 0.123, 1.188288858971884},
    {7, -7, 0.5, 0.4579401515281554},
    {7, -7, 1.0, 0.0},
    {7, -6, -1.0, 0.0},
    {7, -6, -0.5, -0.9892637924811931},
    {7, -6, 0.0, 0.0},
    {7, -6, 0.123, 0.5510632888064705},
    {7, -6, 0.5, 0.9892637924811931},
    {7, -6, 1.0, 0.0},
    {7, -5, -1.0, 0.0},
    {7, -5, -0.5, 1.0081086056435162},
    {7, -5, 0.0, -0.9197539157975898},
    {7, -5, 0.123, -0.7112302520914361},
    {7, -5, 0.5, 1.0081086056435162},
    {7, -5, 1.0, 0.0},
    {7, -4, -1.0, 0.0},
    {7, -4, -0.5, -0.12934039440903608},
    {7, -4, 0.0, 0.0},
    {7, -4, 0.123, -0.6152315407024187},
    {7, -4, 0.5, 0.12934039440903608},
    {7, -4, 1.0, 0.0},
    {7, -3, -1.0, 0.0},
    {7, -3, -0.5, -0.8218074527875313},
    {7, -3, 0.0, 0.8319487194983836},
    {7, -3, 0.123, 0.5513680059618478},
    {7, -3, 0.5, -0.8218074527875313},
    {7, -3, 1.0, 0.0},
    {7, -2, -1.0, 0.0},
    {7, -2, -0.5, 0.52393383009275},
    {7, -2, 0.0, 0.0},
    {7, -2, 0.123, 0.6351243556387363},
    {7, -2, 0.5, -0.52393383009275},
    {7, -2, 1.0, 0.0},
    {7, -1, -1.0, 0.0},
    {7, -1, -0.5, 0.6261280727474814},
    {7, -1, 0.0, -0.8005430285905937},
    {7, -1, 0.123, -0.487705444151235},
    {7, -1, 0.5, 0.6261280727474814},
    {7, -1, 1.0, 0.0},
    {7, 0, -1.0, -2.7386127875258306},
    {7, 0, -0.5, -0.6111064667477073},
    {7, 0, 0.0, 0.0},
    {7, 0, 0.123, -0.6398348127905472},
    {7, 0, 0.5, 0.6111064667477073},
    {7, 0, 1.0, 2.7386127875258306},
    {7, 1, -1.0, 0.0},
    {7, 1, -0.5, -0.6261280727474814},
    {7, 1, 0.0, 0.8005430285905937},
    {7, 1, 0.123, 0.487705444151235},
    {7, 1, 0.5, -0.6261280727474814},
    {7, 1, 1.0, 0.0},
    {7, 2, -1.0, 0.0},
    {7, 2, -0.5, 0.52393383009275},
    {7, 2, 0.0, 0.0},
    {7, 2, 0.123, 0.6351243556387363},
    {7, 2, 0.5, -0.52393383009275},
    {7, 2, 1.0, 0.0},
    {7, 3, -1.0, 0.0},
    {7, 3, -0.5, 0.8218074527875313},
    {7, 3, 0.0, -0.8319487194983836},
    {7, 3, 0.123, -0.5513680059618478},
    {7, 3, 0.5, 0.8218074527875313},
    {7, 3, 1.0, 0.0},
    {7, 4, -1.0, 0.0},
    {7, 4, -0.5, -0.12934039440903608},
    {7, 4, 0.0, 0.0},
    {7, 4, 0.123, -0.6152315407024187},
    {7, 4, 0.5, 0.12934039440903608},
    {7, 4, 1.0, 0.0},
    {7, 5, -1.0, 0.0},
    {7, 5, -0.5, -1.0081086056435162},
    {7, 5, 0.0, 0.9197539157975898},
    {7, 5, 0.123, 0.7112302520914361},
    {7, 5, 0.5, -1.0081086056435162},
    {7, 5, 1.0, 0.0},
    {7, 6, -1.0, 0.0},
    {7, 6, -0.5, -0.9892637924811931},
    {7, 6, 0.0, 0.0},
    {7, 6, 0.123, 0.5510632888064705},
    {7, 6, 0.5, 0.9892637924811931},
    {7, 6, 1.0, 0.0},
    {7, 7, -1.0, 0.0},
    {7, 7, -0.5, -0.4579401515281554},
    {7, 7, 0.0, -1.2534133084800878},
    {7, 7, 0.123, -1.188288858971884},
    {7, 7, 0.5, -0.4579401515281554},
    {7, 7, 1.0, 0.0},
    {8, -8, -1.0, 0.0},
    {8, -8, -0.5, 0.4087933520867987},
    {8, -8, 0.0, 1.2919888658545737},
    {8, -8, 0.123, 1.2155593535544316},
    {8, -8, 0.5, 0.4087933520867987},
    {8, -8, 1.0, 0.0},
    {8, -7, -1.0, 0.0},
    {8, -7, -0.5, -0.9440678074809707},
    {8, -7, 0.0, 0.0},
    {8, -7, 0.123, 0.6026311789521492},
    {8, -7, 0.5, 0.9440678074809707},
    {8, -7, 1.0, 0.0},
    {8, -6, -1.0, 0.0},
    {8, -6, -0.5, 1.094648330336446},
    {8, -6, 0.0, -0.9435352611654214},
    {8, -6, 0.123, -0.6968065031075579},
    {8, -6, 0.5, 1.094648330336446},
    {8, -6, 1.0, 0.0},
    {8, -5, -1.0, 0.0},
    {8, -5, -0.5, -0.37234536464755674},
    {8, -5, 0.0, 0.0},
    {8, -5, 0.123, -0.669229474979514},
    {8, -5, 0.5, 0.37234536464755674},
    {8, -5, 1.0, 0.0},
    {8, -4, -1.0, 0.0},
    {8, -4, -0.5, -0.685664221917295},
    {8, -4, 0.0, 0.8479712116465099},
    {8, -4, 0.123, 0.5112077788652847},
    {8, -4, 0.5, -0.685664221917295},
    {8, -4, 1.0, 0.0},
    {8, -3, -1.0, 0.0},
    {8, -3, -0.5, 0.7554858193939635},
    {8, -3, 0.0, 0.0},
    {8, -3, 0.123, 0.6884563188715969},
    {8, -3, 0.5, -0.7554858193939635},
    {8, -3, 1.0, 0.0},
    {8, -2, -1.0, 0.0},
    {8, -2, -0.5, 0.3316149485997319},
    {8, -2, 0.0, -0.8085088270622034},
    {8, -2, 0.123, -0.42439855020107536},
    {8, -2, 0.5, 0.3316149485997319},
    {8, -2, 1.0, 0.0},
    {8, -1, -1.0, 0.0},
    {8, -1, -0.5, -0.825117432570289},
    {8, -1, 0.0, 0.0},
    {8, -1, 0.123, -0.6936446258634041},
    {8, -1, 0.5, 0.825117432570289},
    {8, -1, 1.0, 0.0},
    {8, 0, -1.0, 2.9154759474226504},
    {8, 0, -0.5, -0.21469248843783126},
    {8, 0, 0.0, 0.7972004543733809},
    {8, 0, 0.123, 0.39819903218911024},
    {8, 0, 0.5, -0.21469248843783126},
    {8, 0, 1.0, 2.9154759474226504},
    {8, 1, -1.0, 0.0},
    {8, 1, -0.5, 0.825117432570289},
    {8, 1, 0.0, 0.0},
    {8, 1, 0.123, 0.6936446258634041},
    {8, 1, 0.5, -0.825117432570289},
    {8, 1, 1.0, 0.0},
    {8, 2, -1.0, 0.0},
    {8, 2, -0.5, 0.3316149485997319},
    {8, 2, 0.0, -0.8085088270622034},
    {8, 2, 0.123, -0.42439855020107536},
    {8, 2, 0.5, 0.3316149485997319},
    {8, 2, 1.0, 0.0},
    {8, 3, -1.0, 0.0},
    {8, 3, -0.5, -0.7554858193939635},
    {8, 3, 0.0, 0.0},
    {8, 3, 0.123, -0.6884563188715969},
    {8, 3, 0.5, 0.7554858193939635},
    {8, 3, 1.0, 0.0},
    {8, 4, -1.0, 0.0},
    {8, 4, -0.5, -0.685664221917295},
    {8, 4, 0.0, 0.8479712116465099},
    {8, 4, 0.123, 0.5112077788652847},
    {8, 4, 0.5, -0.685664221917295},
    {8, 4, 1.0, 0.0},
    {8, 5, -1.0, 0.0},
    {8, 5, -0.5, 0.37234536464755674},
    {8, 5, 0.0, 0.0},
    {8, 5, 0.123, 0.669229474979514},
    {8, 5, 0.5, -0.37234536464755674},
    {8, 5, 1.0, 0.0},
    {8, 6, -1.0, 0.0},
    {8, 6, -0.5, 1.094648330336446},
    {8, 6, 0.0, -0.9435352611654214},
    {8, 6, 0.123, -0.6968065031075579},
    {8, 6, 0.5, 1.094648330336446},
    {8, 6, 1.0, 0.0},
    {8, 7, -1.0, 0.0},
    {8, 7, -0.5, 0.9440678074809707},
    {8, 7, 0.0, 0.0},
    {8, 7, 0.123, -0.6026311789521492},
    {8, 7, 0.5, -0.9440678074809707},
    {8, 7, 1.0, 0.0},
    {8, 8, -1.0, 0.0},
    {8, 8, -0.5, 0.4087933520867987},
    {8, 8, 0.0, 1.2919888658545737},
    {8, 8, 0.123, 1.2155593535544316},
    {8, 8, 0.5, 0.4087933520867987},
    {8, 8, 1.0, 0.0},
};

// F_lm(x) from the definition with exact polynomial derivatives, l <= 8.
inline constexpr PointValue kF[] = {
    {1, -1, -1.0, 1.224744871391589},
    {1, -1, -0.5, 0.9185586535436918},
    {1, -1, 0.0, 0.6123724356957945},
    {1, -1, 0.3, 0.42866070498705616},
    {1, -1, 0.5, 0.30618621784789724},
    {1, -1, 1.0, 0.0},
    {1, 0, -1.0, 0.0},
    {1, 0, -0.5, 0.75},
    {1, 0, 0.0, 0.8660254037844386},
    {1, 0, 0.3, 0.8261355820929153},
    {1, 0, 0.5, 0.75},
    {1, 0, 1.0, 0.0},
    {1, 1, -1.0, 0.0},
    {1, 1, -0.5, 0.30618621784789724},
    {1, 1, 0.0, 0.6123724356957945},
    {1, 1, 0.3, 0.7960841664045328},
    {1, 1, 0.5, 0.9185586535436918},
    {1, 1, 1.0, 1.224744871391589},
    {2, -2, -1.0, 0.0},
    {2, -2, -0.5, 1.0269797953221864},
    {2, -2, 0.0, 0.7905694150420949},
    {2, -2, 0.3, 0.5279086095149425},
    {2, -2, 0.5, 0.3423265984407288},
    {2, -2, 1.0, 0.0},
    {2, -1, -1.0, -1.5811388300841898},
    {2, -1, -0.5, 0.0},
    {2, -1, 0.0, 0.7905694150420949},
    {2, -1, 0.3, 0.8854377448471462},
    {2, -1, 0.5, 0.7905694150420949},
    {2, -1, 1.0, 0.0},
    {2, 0, -1.0, 0.0},
    {2, 0, -0.5, -0.8385254915624212},
    {2, 0, 0.0, 0.0},
    {2, 0, 0.3, 0.554188596057335},
    {2, 0, 0.5, 0.8385254915624212},
    {2, 0, 1.0, 0.0},
    {2, 1, -1.0, 0.0},
    {2, 1, -0.5, -0.7905694150420949},
    {2, 1, 0.0, -0.7905694150420949},
    {2, 1, 0.3, -0.41109609582188933},
    {2, 1, 0.5, 0.0},
    {2, 1, 1.0, 1.5811388300841898},
    {2, 2, -1.0, 0.0},
    {2, 2, -0.5, -0.3423265984407288},
    {2, 2, 0.0, -0.7905694150420949},
    {2, 2, 0.3, -0.9804017033848932},
    {2, 2, 0.5, -1.0269797953221864},
    {2, 2, 1.0, 0.0},
    {3, -3, -1.0, 0.0},
    {3, -3, -0.5, 1.018924927466445},
    {3, -3, 0.0, 0.9057110466368399},
    {3, -3, 0.3, 0.576937936707667},
    {3, -3, 0.5, 0.33964164248881495},
    {3, -3, 1.0, 0.0},
    {3, -2, -1.0, 0.0},
    {3, -2, -0.5, -0.4803258171543562},
    {3, -2, 0.0, 0.739509972887452},
    {3, -2, 0.3, 0.9382452454582437},
    {3, -2, 0.5, 0.8005430285905937},
    {3, -2, 1.0, 0.0},
    {3, -1, -1.0, 1.8708286933869707},
    {3, -1, -0.5, -0.7892558550226283},
    {3, -1, 0.0, -0.23385358667337133},
    {3, -1, 0.3, 0.5483866607490557},
    {3, -1, 0.5, 0.906182648359314},
    {3, -1, 1.0, 0.0},
    {3, 0, -1.0, 0.0},
    {3, 0, -0.5, 0.1753901900050285},
    {3, 0, 0.0, -0.8100925873009825},
    {3, 0, 0.3, -0.42502849169202767},
    {3, 0, 0.5, 0.1753901900050285},
    {3, 0, 1.0, 0.0},
    {3, 1, -1.0, 0.0},
    {3, 1, -0.5, 0.906182648359314},
    {3, 1, 0.0, -0.23385358667337133},
    {3, 1, 0.3, -0.8056256060897642},
    {3, 1, 0.5, -0.7892558550226283},
    {3, 1, 1.0, 1.8708286933869707},
    {3, 2, -1.0, 0.0},
    {3, 2, -0.5, 0.8005430285905937},
    {3, 2, 0.0, 0.739509972887452},
    {3, 2, 0.3, 0.09170818188689603},
    {3, 2, 0.5, -0.4803258171543562},
    {3, 2, 1.0, 0.0},
    {3, 3, -1.0, 0.0},
    {3, 3, -0.5, 0.33964164248881495},
    {3, 3, 0.0, 0.9057110466368399},
    {3, 3, 0.3, 1.0714561681713817},
    {3, 3, 0.5, 1.018924927466445},
    {3, 3, 1.0, 0.0},
    {4, -4, -1.0, 0.0},
    {4, -4, -0.5, 0.9666370606547475},
    {4, -4, 0.0, 0.9921567416492215},
    {4, -4, 0.3, 0.6028932426485223},
    {4, -4, 0.5, 0.3222123535515825},
    {4, -4, 1.0, 0.0},
    {4, -3, -1.0, 0.0},
    {4, -3, -0.5, -0.7892558550226283},
    {4, -3, 0.0, 0.701560760020114},
    {4, -3, 0.3, 0.9831672490921878},
    {4, -3, 0.5, 0.7892558550226283},
    {4, -3, 1.0, 0.0},
    {4, -2, -1.0, 0.0},
    {4, -2, -0.5, -0.48713928962874675},
    {4, -2, 0.0, -0.375},
    {4, -2, 0.3, 0.5909653352777978},
    {4, -2, 0.5, 0.9742785792574935},
    {4, -2, 1.0, 0.0},
    {4, -1, -1.0, -2.1213203435596424},
    {4, -1, -0.5, 0.6960582377305077},
    {4, -1, 0.0, -0.795495128834866},
    {4, -1, 0.3, -0.3998158517524037},
    {4, -1, 0.5, 0.36460193404931357},
    {4, -1, 1.0, 0.0},
    {4, 0, -1.0, 0.0},
    {4, 0, -0.5, 0.6418623720763665},
    {4, 0, 0.0, 0.0},
    {4, 0, 0.3, -0.8043064743538373},
    {4, 0, 0.5, -0.6418623720763665},
    {4, 0, 1.0, 0.0},
    {4, 1, -1.0, 0.0},
    {4, 1, -0.5, -0.36460193404931357},
    {4, 1, 0.0, 0.795495128834866},
    {4, 1, 0.3, 0.02275116068467721},
    {4, 1, 0.5, -0.6960582377305077},
    {4, 1, 1.0, 2.1213203435596424},
    {4, 2, -1.0, 0.0},
    {4, 2, -0.5, -0.9742785792574935},
    {4, 2, 0.0, 0.375},
    {4, 2, 0.3, 0.8556834636710002},
    {4, 2, 0.5, 0.48713928962874675},
    {4, 2, 1.0, 0.0},
    {4, 3, -1.0, 0.0},
    {4, 3, -0.5, -0.7892558550226283},
    {4, 3, 0.0, -0.701560760020114},
    {4, 3, 0.3, 0.16598927582075892},
    {4, 3, 0.5, 0.7892558550226283},
    {4, 3, 1.0, 0.0},
    {4, 4, -1.0, 0.0},
    {4, 4, -0.5, -0.3222123535515825},
    {4, 4, 0.0, -0.9921567416492215},
    {4, 4, 0.3, -1.1196588792043987},
    {4, 4, 0.5, -0.9666370606547475},
    {4, 4, 1.0, 0.0},
    {5, -5, -1.0, 0.0},
    {5, -5, -0.5, 0.8960965383497921},
    {5, -5, 0.0, 1.0620403417479019},
    {5, -5, 0.3, 0.6156329249010063},
    {5, -5, 0.5, 0.29869884611659736},
    {5, -5, 1.0, 0.0},
    {5, -4, -1.0, 0.0},
    {5, -4, -0.5, -0.9816245755129486},
    {5, -4, 0.0, 0.6716932893813962},
    {5, -4, 0.3, 1.0204016369108546},
    {5, -4, 0.5, 0.7634857809545156},
    {5, -4, 1.0, 0.0},
    {5, -3, -1.0, 0.0},
    {5, -3, -0.5, -0.13358218494349217},
    {5, -3, 0.0, -0.47495887979908324},
    {5, -3, 0.3, 0.6504799338288344},
    {5, -3, 0.5, 1.0241300845667731},
    {5, -3, 1.0, 0.0},
    {5, -2, -1.0, 0.0},
    {5, -2, -0.5, 0.8815974423130825},
    {5, -2, 0.0, -0.7756046028744286},
    {5, -2, 0.3, -0.3547722852133024},
    {5, -2, 0.5, 0.5457507976223844},
    {5, -2, 1.0, 0.0},
    {5, -1, -1.0, 2.345207879911715},
    {5, -1, -0.5, 0.12367307179221933},
    {5, -1, 0.0, 0.14657549249448218},
    {5, -1, 0.3, -0.8271328329209876},
    {5, -1, 0.5, -0.47178986646661447},
    {5, -1, 1.0, 0.0},
    {5, 0, -1.0, 0.0},
    {5, 0, -0.5, -0.8256314721961968},
    {5, 0, 0.0, 0.8028270361665706},
    {5, 0, 0.3, -0.06884975153992473},
    {5, 0, 0.5, -0.8256314721961968},
    {5, 0, 1.0, 0.0},
    {5, 1, -1.0, 0.0},
    {5, 1, -0.5, -0.47178986646661447},
    {5, 1, 0.0, 0.14657549249448218},
    {5, 1, 0.3, 0.8007785593704797},
    {5, 1, 0.5, 0.12367307179221933},
    {5, 1, 1.0, 2.345207879911715},
    {5, 2, -1.0, 0.0},
    {5, 2, -0.5, 0.5457507976223844},
    {5, 2, 0.0, -0.7756046028744286},
    {5, 2, 0.3, 0.29336227546835114},
    {5, 2, 0.5, 0.8815974423130825},
    {5, 2, 1.0, 0.0},
    {5, 3, -1.0, 0.0},
    {5, 3, -0.5, 1.0241300845667731},
    {5, 3, 0.0, -0.47495887979908324},
    {5, 3, 0.3, -0.8147207144633575},
    {5, 3, 0.5, -0.13358218494349217},
    {5, 3, 1.0, 0.0},
    {5, 4, -1.0, 0.0},
    {5, 4, -0.5, 0.7634857809545156},
    {5, 4, 0.0, 0.6716932893813962},
    {5, 4, 0.3, -0.37900632228117453},
    {5, 4, 0.5, -0.9816245755129486},
    {5, 4, 1.0, 0.0},
    {5, 5, -1.0, 0.0},
    {5, 5, -0.5, 0.29869884611659736},
    {5, 5, 0.0, 1.0620403417479019},
    {5, 5, 0.3, 1.1433182891018687},
    {5, 5, 0.5, 0.8960965383497921},
    {5, 5, 1.0, 0.0},
    {6, -6, -1.0, 0.0},
    {6, -6, -0.5, 0.8191882467548077},
    {6, -6, 0.0, 1.121086944665756},
    {6, -6, 0.3, 0.6199273770348253},
    {6, -6, 0.5, 0.27306274891826926},
    {6, -6, 1.0, 0.0},
    {6, -5, -1.0, 0.0},
    {6, -5, -0.5, -1.092250995673077},
    {6, -5, 0.0, 0.6472598492877494},
    {6, -5, 0.3, 1.050551927142563},
    {6, -5, 0.5, 0.7281673304487181},
    {6, -5, 1.0, 0.0},
    {6, -4, -1.0, 0.0},
    {6, -4, -0.5, 0.20167020537158964},
    {6, -4, 0.0, -0.5519850541454905},
    {6, -4, 0.3, 0.7161192143731598},
    {6, -4, 0.5, 1.0531666280516347},
    {6, -4, 1.0, 0.0},
    {6, -3, -1.0, 0.0},
    {6, -3, -0.5, 0.8503162468908626},
    {6, -3, 0.0, -0.755836663902989},
    {6, -3, 0.3, -0.29658426022222173},
    {6, -3, 0.5, 0.7085968724090522},
    {6, -3, 1.0, 0.0},
    {6, -2, -1.0, 0.0},
    {6, -2, -0.5, -0.34774230577744925},
    {6, -2, 0.0, 0.25194555463432966},
    {6, -2, 0.3, -0.850630775065946},
    {6, -2, 0.5, -0.27955753993873367},
    {6, -2, 1.0, 0.0},
    {6, -1, -1.0, -2.5495097567963922},
    {6, -1, -0.5, -0.8066808214863586},
    {6, -1, 0.0, 0.7967217989988726},
    {6, -1, 0.3, -0.16980563570934926},
    {6, -1, 0.5, -0.8763939788987599},
    {6, -1, 1.0, 0.0},
    {6, 0, -1.0, 0.0},
    {6, 0, -0.5, 0.19563206279058457},
    {6, 0, 0.0, 0.0},
    {6, 0, 0.3, 0.7587171702800881},
    {6, 0, 0.5, -0.19563206279058457},
    {6, 0, 1.0, 0.0},
    {6, 1, -1.0, 0.0},
    {6, 1, -0.5, 0.8763939788987599},
    {6, 1, 0.0, -0.7967217989988726},
    {6, 1, 0.3, 0.41525650065772596},
    {6, 1, 0.5, 0.8066808214863586},
    {6, 1, 1.0, 2.5495097567963922},
    {6, 2, -1.0, 0.0},
    {6, 2, -0.5, 0.27955753993873367},
    {6, 2, 0.0, -0.25194555463432966},
    {6, 2, 0.3, -0.6810944162316332},
    {6, 2, 0.5, 0.34774230577744925},
    {6, 2, 1.0, 0.0},
    {6, 3, -1.0, 0.0},
    {6, 3, -0.5, -0.7085968724090522},
    {6, 3, 0.0, 0.755836663902989},
    {6, 3, 0.3, -0.5329162449447526},
    {6, 3, 0.5, -0.8503162468908626},
    {6, 3, 1.0, 0.0},
    {6, 4, -1.0, 0.0},
    {6, 4, -0.5, -1.0531666280516347},
    {6, 4, 0.0, 0.5519850541454905},
    {6, 4, 0.3, 0.7257026096809305},
    {6, 4, 0.5, -0.20167020537158964},
    {6, 4, 1.0, 0.0},
    {6, 5, -1.0, 0.0},
    {6, 5, -0.5, -0.7281673304487181},
    {6, 5, 0.0, -0.6472598492877494},
    {6, 5, 0.3, 0.5574357164429926},
    {6, 5, 0.5, 1.092250995673077},
    {6, 5, 1.0, 0.0},
    {6, 6, -1.0, 0.0},
    {6, 6, -0.5, -0.27306274891826926},
    {6, 6, 0.0, -1.121086944665756},
    {6, 6, 0.3, -1.1512937002075325},
    {6, 6, 0.5, -0.8191882467548077},
    {6, 6, 1.0, 0.0},
    {7, -7, -1.0, 0.0},
    {7, -7, -0.5, 0.7419478443608948},
    {7, -7, 0.0, 1.1724607910888214},
    {7, -7, 0.3, 0.618472715561116},
    {7, -7, 0.5, 0.24731594812029828},
    {7, -7, 1.0, 0.0},
    {7, -6, -1.0, 0.0},
    {7, -6, -0.5, -1.1448503788203885},
    {7, -6, 0.0, 0.6267066542400439},
    {7, -6, 0.3, 1.0743048110263336},
    {7, -6, 0.5, 0.6869102272922332},
    {7, -6, 1.0, 0.0},
    {7, -5, -1.0, 0.0},
    {7, -5, -0.5, 0.49258936075862525},
    {7, -5, 0.0, -0.6145364344746982},
    {7, -5, 0.3, 0.7829898802683423},
    {7, -5, 0.5, 1.0629559890054545},
    {7, -5, 1.0, 0.0},
    {7, -4, -1.0, 0.0},
    {7, -4, -0.5, 0.6885391369242708},
    {7, -4, 0.0, -0.7374437213696378},
    {7, -4, 0.3, -0.22898651683496946},
    {7, -4, 0.5, 0.8482003860661308},
    {7, -4, 1.0, 0.0},
    {7, -3, -1.0, 0.0},
    {7, -3, -0.5, -0.6852823994401752},
    {7, -3, 0.0, 0.3335214719708838},
    {7, -3, 0.3, -0.867467569644149},
    {7, -3, 0.5, -0.07556345849340335},
    {7, -3, 1.0, 0.0},
    {7, -2, -1.0, 0.0},
    {7, -2, -0.5, -0.5340008165943942},
    {7, -2, 0.0, 0.7861176483397698},
    {7, -2, 0.3, -0.27387901138057485},
    {7, -2, 0.5, -0.8573797971615174},
    {7, -2, 1.0, 0.0},
    {7, -1, -1.0, 2.7386127875258306},
    {7, -1, -0.5, 0.6594132963128296},
    {7, -1, 0.0, -0.10697706201272776},
    {7, -1, 0.3, 0.7096977017067782},
    {7, -1, 0.5, -0.4661859780523402},
    {7, -1, 1.0, 0.0},
    {7, 0, -1.0, 0.0},
    {7, 0, -0.5, 0.6261280727474814},
    {7, 0, 0.0, -0.8005430285905937},
    {7, 0, 0.3, 0.5274268808920202},
    {7, 0, 0.5, 0.6261280727474814},
    {7, 0, 1.0, 0.0},
    {7, 1, -1.0, 0.0},
    {7, 1, -0.5, -0.4661859780523402},
    {7, 1, 0.0, -0.10697706201272776},
    {7, 1, 0.3, -0.5619306710660206},
    {7, 1, 0.5, 0.6594132963128296},
    {7, 1, 1.0, 2.7386127875258306},
    {7, 2, -1.0, 0.0},
    {7, 2, -0.5, -0.8573797971615174},
    {7, 2, 0.0, 0.7861176483397698},
    {7, 2, 0.3, -0.649331171424352},
    {7, 2, 0.5, -0.5340008165943942},
    {7, 2, 1.0, 0.0},
    {7, 3, -1.0, 0.0},
    {7, 3, -0.5, -0.07556345849340335},
    {7, 3, 0.0, 0.3335214719708838},
    {7, 3, 0.3, 0.5069648776337647},
    {7, 3, 0.5, -0.6852823994401752},
    {7, 3, 1.0, 0.0},
    {7, 4, -1.0, 0.0},
    {7, 4, -0.5, 0.8482003860661308},
    {7, 4, 0.0, -0.7374437213696378},
    {7, 4, 0.3, 0.7082129817571334},
    {7, 4, 0.5, 0.6885391369242708},
    {7, 4, 1.0, 0.0},
    {7, 5, -1.0, 0.0},
    {7, 5, -0.5, 1.0629559890054545},
    {7, 5, 0.0, -0.6145364344746982},
    {7, 5, 0.3, -0.6099646889962532},
    {7, 5, 0.5, 0.49258936075862525},
    {7, 5, 1.0, 0.0},
    {7, 6, -1.0, 0.0},
    {7, 6, -0.5, 0.6869102272922332},
    {7, 6, 0.0, 0.6267066542400439},
    {7, 6, 0.3, -0.7079520183261092},
    {7, 6, 0.5, -1.1448503788203885},
    {7, 6, 1.0, 0.0},
    {7, 7, -1.0, 0.0},
    {7, 7, -0.5, 0.24731594812029828},
    {7, 7, 0.0, 1.1724607910888214},
    {7, 7, 0.3, 1.1485921860420725},
    {7, 7, 0.5, 0.7419478443608948},
    {7, 7, 1.0, 0.0},
    {8, -8, -1.0, 0.0},
    {8, -8, -0.5, 0.6675567485697105},
    {8, -8, 0.0, 1.2180987843510476},
    {8, -8, 0.3, 0.6129505271914876},
    {8, -8, 0.5, 0.2225189161899035},
    {8, -8, 1.0, 0.0},
    {8, -7, -1.0, 0.0},
    {8, -7, -0.5, -1.1562422054582209},
    {8, -7, 0.0, 0.6090493921755238},
    {8, -7, 0.3, 1.092329463636422},
    {8, -7, 0.5, 0.6423567808101228},
    {8, -7, 1.0, 0.0},
    {8, -6, -1.0, 0.0},
    {8, -6, -0.5, 0.7312717792128699},
    {8, -6, 0.0, -0.6671801814586896},
    {8, -6, 0.3, 0.8485403405144629},
    {8, -6, 0.5, 1.0562814588630343},
    {8, -6, 1.0, 0.0},
    {8, -5, -1.0, 0.0},
    {8, -5, -0.5, 0.4560280757385262},
    {8, -5, 0.0, -0.7206369591917452},
    {8, -5, 0.3, -0.15456070166983127},
    {8, -5, 0.5, 0.9627259376702221},
    {8, -5, 1.0, 0.0},
    {8, -4, -1.0, 0.0},
    {8, -4, -0.5, -0.8762752062155599},
    {8, -4, 0.0, 0.3997374626708135},
    {8, -4, 0.3, -0.8749408393545781},
    {8, -4, 0.5, 0.12981854906897183},
    {8, -4, 1.0, 0.0},
    {8, -3, -1.0, 0.0},
    {8, -3, -0.5, -0.16328424400796984},
    {8, -3, 0.0, 0.7740882678896348},
    {8, -3, 0.3, -0.37710860265409635},
    {8, -3, 0.5, -0.7801358324825226},
    {8, -3, 1.0, 0.0},
    {8, -2, -1.0, 0.0},
    {8, -2, -0.5, 0.858703838871392},
    {8, -2, 0.0, -0.19056735808828856},
    {8, -2, 0.3, 0.6493146465946121},
    {8, -2, 0.5, -0.6781955243939223},
    {8, -2, 1.0, 0.0},
    {8, -1, -1.0, -2.9154759474226504},
    {8, -1, -0.5, 0.1585503582247059},
    {8, -1, 0.0, -0.7972004543733809},
    {8, -1, 0.3, 0.6265123274637598},
    {8, -1, 0.5, 0.3831188790772074},
    {8, -1, 1.0, 0.0},
    {8, 0, -1.0, 0.0},
    {8, 0, -0.5, -0.825117432570289},
    {8, 0, 0.0, 0.0},
    {8, 0, 0.3, -0.43899208059949335},
    {8, 0, 0.5, 0.825117432570289},
    {8, 0, 1.0, 0.0},
    {8, 1, -1.0, 0.0},
    {8, 1, -0.5, -0.3831188790772074},
    {8, 1, 0.0, 0.7972004543733809},
    {8, 1, 0.3, -0.734979854051763},
    {8, 1, 0.5, -0.1585503582247059},
    {8, 1, 1.0, 2.9154759474226504},
    {8, 2, -1.0, 0.0},
    {8, 2, -0.5, 0.6781955243939223},
    {8, 2, 0.0, 0.19056735808828856},
    {8, 2, 0.3, 0.3162952346479011},
    {8, 2, 0.5, -0.858703838871392},
    {8, 2, 1.0, 0.0},
    {8, 3, -1.0, 0.0},
    {8, 3, -0.5, 0.7801358324825226},
    {8, 3, 0.0, -0.7740882678896348},
    {8, 3, 0.3, 0.7895748790399845},
    {8, 3, 0.5, 0.16328424400796984},
    {8, 3, 1.0, 0.0},
    {8, 4, -1.0, 0.0},
    {8, 4, -0.5, -0.12981854906897183},
    {8, 4, 0.0, -0.3997374626708135},
    {8, 4, 0.3, -0.31036213481349045},
    {8, 4, 0.5, 0.8762752062155599},
    {8, 4, 1.0, 0.0},
    {8, 5, -1.0, 0.0},
    {8, 5, -0.5, -0.9627259376702221},
    {8, 5, 0.0, 0.7206369591917452},
    {8, 5, 0.3, -0.8300924170761976},
    {8, 5, 0.5, -0.4560280757385262},
    {8, 5, 1.0, 0.0},
    {8, 6, -1.0, 0.0},
    {8, 6, -0.5, -1.0562814588630343},
    {8, 6, 0.0, 0.6671801814586896},
    {8, 6, 0.3, 0.47960975768208786},
    {8, 6, 0.5, -0.7312717792128699},
    {8, 6, 1.0, 0.0},
    {8, 7, -1.0, 0.0},
    {8, 7, -0.5, -0.6423567808101228},
    {8, 7, 0.0, -0.6090493921755238},
    {8, 7, 0.3, 0.835310766310205},
    {8, 7, 0.5, 1.1562422054582209},
    {8, 7, 1.0, 0.0},
    {8, 8, -1.0, 0.0},
    {8, 8, -0.5, -0.2225189161899035},
    {8, 8, 0.0, -1.2180987843510476},
    {8, 8, 0.3, -1.1383366933556198},
    {8, 8, 0.5, -0.6675567485697105},
    {8, 8, 1.0, 0.0},
};

// Hilbert 4x4 eigenvalues (ascending) split into double-double hi/lo.
inline constexpr double kHilbertHi[4] = {9.670230402258689e-05, 0.006738273605760748, 0.16914122022145003, 1.5002142800592428};
inline constexpr double kHilbertLo[4] = {-1.880637679911224e-21, -3.8867157956218813e-19, -1.3417734852733587e-18, -2.077467882478601e-17};

// K_0 for L = 2, Theta = pi/3 by a 10^6-cell midpoint rule (row-major).
inline constexpr double kMidpointK[4] = {0.15625000000000772, 0.23583529450197016, 0.23583529450197016, 0.36718750000009753};

// 180 (1 - cos 30 deg).
inline constexpr double kShannon30 = 24.115427318801043;

struct StabilityReference {
  double theta_deg;
  double cos_theta;
  double eta[18];
  double g[18][18];
};

// m = 1, L = 18 concentration eigenvectors from exact K_1.
inline constexpr StabilityReference kStability[3] = {
    {30.0, 0.8660254037844387,
     {0.999999549263875, 0.9994676616149829, 0.9218982027869341, 0.22660108971609602, 0.0037875490280230464, 1.4860193625906236e-05, 2.4139909815143087e-08, 1.8916476452493495e-11, 7.754127101450845e-15, 1.7474235254344542e-18, 2.229742016100124e-22, 1.6331924806356967e-26, 6.85891163177285e-31, 1.6228670619919768e-35, 2.079961049633327e-40, 1.3412219330466742e-45, 3.7739436000699346e-51, 3.3045464252302563e-57},
     {{0.274191246879946, 0.336936104251067, 0.3700509073342618, 0.3795852413004804, 0.3696833350740941, 0.3443874391025808, 0.3079257912554384, 0.26457229995127124, 0.21837363910877344, 0.1728684265805155, 0.13086493659475903, 0.094312275789803, 0.06427652136879704, 0.04101442329724592, 0.02412314377238822, 0.012735981757620305, 0.0057314622560065125, 0.0019260983488084992},
      {-0.24797374526247515, -0.2737920916860269, -0.249011839624283, -0.18327101247553165, -0.08825598343871573, 0.022111374044435177, 0.13316911639112358, 0.2314051850339467, 0.3061842489598514, 0.3509671034969188, 0.3638304418382164, 0.34724328966991624, 0.3071939605200765, 0.2518691100381628, 0.19014821344555605, 0.13018497752181865, 0.07830464385853615, 0.03836516467741923},
      {0.21267268972193623, 0.2130629244356618, 0.15761968897544051, 0.06363067432761062, -0.04647096553415574, -0.14793419225590124, -0.21820276729767157, -0.24125225234797082, -0.21063620536342284, -0.1305655490457126, -0.014818159994817665, 0.11624592525900763, 0.2398907556428661, 0.33552146744449557, 0.3885684965490976, 0.3929672022816163, 0.35179229289004227, 0.2760183021577876},
      {-0.202046392870703, -0.1862261859415319, -0.11067820799556208, -0.0015140201819611428, 0.10873383247724999, 0.18786558720738705, 0.21206644548566717, 0.1723042163096803, 0.07718796257742855, -0.048583028858095734, -0.16991293706082802, -0.2498240161827732, -0.25874237214115886, -0.1822802037494758, -0.025574079594267423, 0.1869479511025263, 0.41640304562747277, 0.6178172607459645},
      {0.23708959034952004, 0.1949409268953638, 0.07666032969299742, -0.0696195289049748, -0.1889943550361347, -0.23626869591497193, -0.19143107041211962, -0.06780851411723539, 0.0905548879446295, 0.22237701440662813, 0.27009902419527754, 0.2023342611939297, 0.030817184085237575, -0.1841259720410944, -0.34272293246123053, -0.32867978889571264, -0.04098395711967125, 0.5733338768936578},
      {0.2598584973192805, 0.17874685554057174, 0.012357778748246994, -0.15603650891018517, -0.2453556299229579, -0.21084929841020467, -0.06590571456404438, 0.12048235298167542, 0.2523792639327011, 0.25222012981191916, 0.10449588313882323, -0.12330975859720135, -0.29866247539121077, -0.2847626381515454, -0.032012999314290726, 0.32706070732045184, 0.4153052809223956, -0.3851111811827315},
      {-0.27408356375335213, -0.1433387445300163, 0.06794047629544726, 0.2287547237371677, 0.24098752877098792, 0.09525160015700429, -0.11907628505052646, -0.2619078875475951, -0.22805013062338952, -0.023874093585589742, 0.21636237884558338, 0.30222572718055185, 0.12634560431140368, -0.205377248858456, -0.36834360128813703, -0.0522654220481417, 0.5112471660023595, -0.22092880193103623},
      {0.2822861753288151, 0.09288131832234724, -0.1509479214003242, -0.263820046209475, -0.16128519885024967, 0.07673605326661813, 0.2584326088463126, 0.22459789048806755, -0.013254036497093847, -0.25538372826683353, -0.26253613772300466, 0.012684068814688641, 0.3084466862751009, 0.2410987985030121, -0.2168838335167483, -0.38830505243915814, 0.4152696538877562, -0.11022435528683074},
      {0.2851222688949429, 0.030382455739505414, -0.22326579717165915, -0.24392712373573136, -0.018666601090378612, 0.23068146540185275, 0.24817493651906905, -0.0006550641782736384, -0.2630896246786115, -0.23321375411372916, 0.09300081832470516, 0.3265505709846443, 0.09860821648299635, -0.3348521094095349, -0.18571594130870112, 0.4774686890145257, -0.26034631510078043, 0.047904269897897526},
      {0.2828121524066842, -0.040782293732464475, -0.271368009693841, -0.16311252177371413, 0.14516060140389142, 0.28056338110273693, 0.06464315716220698, -0.2460981584086, -0.23705847055468007, 0.11623396354004568, 0.3196046043487872, 0.005683802736296896, -0.3594122098509942, -0.01839667608243759, 0.4415818598423521, -0.3733372374669796, 0.13218712316212686, -0.018073296882786673},
      {-0.2754124689678054, 0.11653443926091014, 0.282872773865066, 0.031044115410356572, -0.26752920974516503, -0.1763811931881563, 0.18616342175044237, 0.2719270592333566, -0.08622334137831143, -0.31896207164744295, 0.026197709293275313, 0.3539807284699065, -0.08030881920572787, -0.3765334866344635, 0.43011092007335733, -0.2164035384687793, 0.05528322802192899, -0.005878555316815165},
      {-0.26290134536545073, 0.19195495870079438, 0.2483577183142408, -0.12468003027963605, -0.2850560831329691, 0.04968434812107909, 0.30674807147563704, 0.0031827676100556856, -0.32410543693107763, -0.0017171231868010925, 0.352173227424733, -0.11492165567289003, -0.3301193810216253, 0.44843605527648545, -0.2770238388258048, 0.09754973549249543, -0.019097707595129982, 0.0016315856936591404},
      {-0.24521201914709462, 0.26119979392369236, 0.16362273158185758, -0.2598005352406645, -0.1638646291903645, 0.2687914825100637, 0.1519917985042048, -0.30191002158776536, -0.09008094953642586, 0.35594662905185964, -0.09219327151116197, -0.3230288242636861, 0.45067297799563594, -0.3083544013089766, 0.13016994404719492, -0.03468893634885668, 0.005414680545978411, -0.0003808876883122618},
      {-0.22224613807232294, 0.31742890334799884, 0.032397833740815445, -0.3200655879840593, 0.06737451462299077, 0.3046069285332205, -0.18944281193233725, -0.22783799360471496, 0.33628242020274923, -0.008776533367565252, -0.3567632174166144, 0.4473764516550944, -0.3122907697342415, 0.14462475193791183, -0.0458751072593335, 0.009696221925112007, -0.0012413583492919312, 7.329326940527796e-05},
      {-0.19387404935418368, 0.35272508384558215, -0.13046756023377168, -0.25546252848312584, 0.29619345895120025, 0.060657229497094525, -0.35174670004300695, 0.23498135185183716, 0.14008341303032545, -0.41538299979052734, 0.43320235168629156, -0.28979473803080413, 0.1381561022154106, -0.04810299745867305, 0.012084781543088369, -0.0020911717520185015, 0.00022432592856456082, -1.1291038624688352e-05},
      {0.1599156562288484, -0.3579573099104168, 0.2952226755207522, 0.04462944304560706, -0.34164886659771043, 0.3105430202840468, 0.0044309659161950446, -0.330349108523272, 0.4595946702414881, -0.38966883709255906, 0.239555680570549, -0.11224840700164954, 0.04058404382313172, -0.011226644006552584, 0.0023111763915434945, -0.00033508547284390557, 3.0629556941102273e-05, -1.3312522905789523e-06},
      {-0.12005821490166323, 0.3224105437767892, -0.41240060801918166, 0.266945068904516, 0.04507284259976275, -0.3374927149424663, 0.46891647248361995, -0.4282029567236083, 0.2969875444260945, -0.16382330781802926, 0.07303833710667404, -0.026356144807798125, 0.007627861241348083, -0.0017356532746062743, 0.00029994642237759963, -3.7089086813478725e-05, 2.9284851128987454e-06, -1.111033339077582e-07},
      {-0.07340013795844766, 0.23197827635806487, -0.40406661127639515, 0.506049179015507, -0.49943012865024106, 0.404880614140426, -0.2752602793652065, 0.15850633492875726, -0.07756428370200687, 0.03220074557587718, -0.011272468377866267, 0.0032918527698152125, -0.0007887074880217204, 0.00015123373745503857, -2.234192761301656e-05, 2.3896836866673778e-06, -1.6483788827168397e-07, 5.509663811797951e-09}}},
    {60.0, 0.5000000000000001,
     {0.9999999999999996, 0.9999999999960935, 0.9999999936444322, 0.9999965440691564, 0.9992630103313969, 0.9440627015265144, 0.36035389167243437, 0.014252826403155961, 0.00014081290143993345, 6.483981033327741e-07, 1.581534509172248e-09, 2.136107907626457e-12, 1.619105519827409e-15, 6.82040883470831e-19, 1.5422381627046965e-22, 1.7436312776929223e-26, 8.564206235749332e-31, 1.3048135333731905e-35},
     {{0.38120277689795684, 0.4446504266110821, 0.4514098977998891, 0.4165433425974054, 0.354856185216118, 0.2808519392701892, 0.20690936403748472, 0.14179482681674027, 0.09014279409147011, 0.052911708957698096, 0.02847799241774346, 0.013916589195839124, 0.006089231273793485, 0.002337578810032936, 0.0007631167498616293, 0.00020109293180069638, 3.867754337915601e-05, 4.179880062749622e-06},
      {-0.3488333292499818, -0.3176192974293898, -0.18491628140827038, 0.0013803417340867016, 0.18832716939386512, 0.33162909392635054, 0.40643531871398764, 0.41051938728004717, 0.35978471404789875, 0.27915812366694537, 0.19307174257672738, 0.11889551085793312, 0.06468734212239284, 0.030618822505087018, 0.012276346829537947, 0.003976668458096017, 0.000947100023022332, 0.0001291140915009508},
      {0.3178940764289922, 0.21428786069157468, 0.008671434390965467, -0.19589612515698251, -0.30681091541113964, -0.27901532021104, -0.1288950932551357, 0.08042422306214164, 0.27203575375720696, 0.3885271097748137, 0.4104354294029654, 0.3546986737491644, 0.2585058402135466, 0.1595106520934906, 0.08213918036680756, 0.034003698494666536, 0.010412579637988927, 0.0018715777776921014},
      {-0.28781649914569823, -0.13200725027424273, 0.09960014389654197, 0.2561054775759239, 0.2424906754208954, 0.07141295933512315, -0.1505617547892458, -0.29105462640560514, -0.2693014876958425, -0.09624947363828179, 0.14162997545723993, 0.3377109217516451, 0.42212784081047283, 0.3881882606050577, 0.2801530849466213, 0.15825530291038276, 0.06599677593596512, 0.01671207153928414},
      {0.25715531126677915, 0.06863888611130142, -0.1569376920663809, -0.2423580653952188, -0.12680252257851235, 0.094728209904998, 0.24795495389650068, 0.2123388036092907, 0.00974902430898393, -0.21455705688960564, -0.29897007181113183, -0.17791605498232188, 0.0803365180947938, 0.3295617916182982, 0.4459905946293738, 0.39934617656695315, 0.2519793699713854, 0.1003031635894754},
      {-0.22124580482594244, -0.023291603578049328, 0.17329403825559972, 0.1927506812214258, 0.02552127148037319, -0.16986366885790097, -0.21096656079522266, -0.055096546275225866, 0.16144044377596142, 0.24250015242956702, 0.10515120487352518, -0.14374441187465486, -0.2929423104430299, -0.20048690822885323, 0.0907785259879925, 0.3889062257014567, 0.5040368926468455, 0.3874737064344085},
      {0.1988255978693606, -0.004503084198681016, -0.17653375368617627, -0.14971829617669788, 0.03867590001847844, 0.18999434001382406, 0.14447382161558783, -0.05677504835677802, -0.20911089158768711, -0.14833020448953826, 0.07753986306074162, 0.2426902795264928, 0.16161795630986078, -0.11418045215865127, -0.31674550004913676, -0.19643290143333847, 0.2371185823233769, 0.6929949703604231},
      {-0.21929348817200062, 0.03569322380123155, 0.21265842462202006, 0.12561592656734363, -0.11236739836073101, -0.22196393842649292, -0.07119544726276038, 0.17163887932560018, 0.22152434775532587, 0.004597169991633515, -0.2366519979000396, -0.20315225243343701, 0.09985421062231196, 0.3164818587790253, 0.1231748611399997, -0.3214624924303677, -0.3736326917423315, 0.5278237385313589},
      {-0.23119174407548113, 0.07929696043029671, 0.23690835795666515, 0.06523880732215145, -0.1955573739169067, -0.1987397120877843, 0.06682895146525668, 0.25334602391279004, 0.09956818123792485, -0.2057486682773777, -0.23901654956750554, 0.08246932469715863, 0.3163190401506081, 0.06236710683513127, -0.3583586830024275, -0.16685040217177655, 0.5375158439730875, -0.261118952708964},
      {-0.23345708530624007, 0.1298211460140815, 0.23735552599277052, -0.02657696047549645, -0.2512336876661106, -0.09576741122374723, 0.2130814067606453, 0.20225521374616579, -0.13247534471569916, -0.27347079690104364, 0.037490768452669916, 0.3145772050595848, 0.037704794034826614, -0.3604519858710828, -0.03451171522743466, 0.47779201372466495, -0.38519055152075826, 0.10537540376231969},
      {0.22955032777515288, -0.18323789964372558, -0.2092355295310855, 0.1333777179488648, 0.24585164001529297, -0.06798579803713053, -0.27283548453605894, 0.002781385013193679, 0.28916313128353743, 0.04646660885508215, -0.3089715057914051, -0.05819399278784625, 0.3544824870067514, -0.026652722271101624, -0.41581826368090846, 0.43485560684341096, -0.19588325691595201, 0.03580905135578666},
      {0.22041095672366015, -0.23538587150335855, -0.1485677252833326, 0.23117192374565862, 0.15765533696723152, -0.22958618416066853, -0.16950177183875886, 0.24085481273826742, 0.16679390604432082, -0.2774128775631813, -0.12419581252670807, 0.34664539446331416, -0.028444476880460368, -0.3825969541610129, 0.4461366598089617, -0.2521873021409331, 0.07678597464423545, -0.010249997613967336},
      {0.20636984792185464, -0.2815598328940129, -0.055070884174983493, 0.28867836412585735, -0.007296813290637915, -0.293578570722039, 0.07794696978750566, 0.2849588844011755, -0.18152820140982096, -0.22626799017629579, 0.321369632860574, 0.023841946734327945, -0.3847191099615489, 0.44128288877681776, -0.2752971119403092, 0.10560733156186525, -0.023775552223082575, 0.0024479102204928724},
      {0.18753534290516935, -0.31636777971498264, 0.06571439904228468, 0.27254519445107683, -0.20025948515014347, -0.1791391442490564, 0.3023405597560487, 0.009453385212445695, -0.3260960020783954, 0.24389030590006455, 0.12882303844036366, -0.41335528427775786, 0.4261389673757327, -0.27030294509998637, 0.11567681610024588, -0.0331130152847951, 0.005814103872435235, -0.00047929998157828895},
      {-0.16390301565780033, 0.3336287451953941, -0.20014619611598372, -0.15773036466747922, 0.3258117389712432, -0.0996827102967915, -0.2528638358339774, 0.3362852511727293, -0.07485073738017774, -0.27382638695348405, 0.4449588214632921, -0.3934836829902477, 0.24024228504160766, -0.10678453938001217, 0.03449969795766833, -0.007774449189306483, 0.0011034568229695146, -7.484894697441158e-05},
      {-0.13538237721924576, 0.32624245873046775, -0.32380901769512593, 0.055460746431847445, 0.2641172925628469, -0.35445067681067993, 0.14610385983866514, 0.18508921187504343, -0.4120771069289232, 0.4412001482603529, -0.33017913129965665, 0.18748998480475954, -0.08263545622916155, 0.028161410248914158, -0.007236923853909091, 0.0013295320983106962, -0.00015654623462352498, 8.92144964167121e-06},
      {0.10174672222588019, -0.28586900228639933, 0.3980521938590676, -0.31529360365330206, 0.0568796447358656, 0.23840755450610593, -0.4269834669273618, 0.4544132389956785, -0.3621304217672528, 0.23013775207699252, -0.11920487137572305, 0.050528927928737095, -0.01739448142750659, 0.004772076362958762, -0.0010087251220205387, 0.00015489648052696684, -1.5431829489587452e-05, 7.511777347000368e-07},
      {0.06225576761478299, -0.2013917709595948, 0.3632754478846187, -0.47672406500500786, 0.49885860550389033, -0.43394928446002995, 0.32040490703533075, -0.20283548454352934, 0.11047742110424812, -0.05169532323663022, 0.020660283696179362, -0.006978484082914717, 0.001959928371222641, -0.0004466037738444563, 7.951606727384734e-05, -1.0400002120402775e-05, 8.904700965194637e-07, -3.752396746751333e-08}}},
    {90.0, 0.0,
     {1.0, 1.0, 1.0, 0.9999999999999898, 0.9999999999867829, 0.9999999915547753, 0.9999972310988655, 0.9995400403770761, 0.966271651330574, 0.4868636469359635, 0.029734217861806363, 0.00039125743101571406, 2.2884408744005892e-06, 6.753769395902904e-09, 1.011808522933897e-11, 7.312488144074625e-15, 2.2408511376353904e-18, 2.0938498804154373e-22},
     {{0.44960704992954265, 0.5012655979340573, 0.4753755884296845, 0.40032473522653345, 0.30389226454759083, 0.20910896974528106, 0.1305614842507454, 0.07383203645219204, 0.037657494972632356, 0.01721158371090389, 0.006985139583754815, 0.002485588339960137, 0.0007620317534759726, 0.00019631466281784968, 4.093558530865821e-05, 6.501047488373371e-06, 7.018428706700868e-07, 3.8816429250636397e-08},
      {-0.40448609180725836, -0.30270963529095485, -0.07451324531431672, 0.1785963258039752, 0.367930177848716, 0.44851528986889094, 0.42544477341786574, 0.33698740620872913, 0.22885617645915227, 0.13453997006455642, 0.06849902281672629, 0.030014399261556367, 0.01117187501153408, 0.003456929915394806, 0.0008588905686849831, 0.00016160319035963001, 2.059748391385251e-05, 1.3432221484572927e-06},
      {0.3626267496176887, 0.14650174604533972, -0.15331943578981477, -0.33663551332059327, -0.2992123957365969, -0.07919303245888112, 0.1918902674674287, 0.3840552846927069, 0.43863144013968913, 0.37670392998911323, 0.26073150915079696, 0.1487018514342812, 0.07000485270121629, 0.02685983740588788, 0.008161189063294248, 0.0018603842820074331, 0.0002856719207056748, 2.2399341971635302e-05},
      {-0.32388708259811594, -0.02660686993689692, 0.26016365409555675, 0.2841123616828271, 0.04303191032670971, -0.2416731595318743, -0.33361217208196875, -0.1695238312432286, 0.12411603031041846, 0.3617238529846176, 0.4378137649262958, 0.368213312693617, 0.23642062327577235, 0.11840751085277285, 0.045712309169776574, 0.013018716453803491, 0.002473625098144381, 0.00023919168531991446},
      {0.2880946325654982, -0.06240821118538763, -0.28660703114133596, -0.15107141483139808, 0.1647171893423869, 0.29837317335981817, 0.1060074146733616, -0.20781051364856873, -0.3305045468987579, -0.15192469741501075, 0.1710681079220672, 0.4023099896378778, 0.431277318063278, 0.3123162621929959, 0.16328791165736653, 0.06082216107966408, 0.014840861194499143, 0.0018316210758489101},
      {-0.25501727910771677, 0.1253387854726369, 0.2636077848803493, 0.01135288784619712, -0.25846075053141493, -0.17546759971373482, 0.1484008437185932, 0.29104294234235933, 0.0690332999554086, -0.25366165617677616, -0.30760552949620085, -0.033000153671089535, 0.30925479195471844, 0.45467181012046476, 0.36892504450106683, 0.19433843903541842, 0.06439800954200706, 0.010657138523099885},
      {0.22428322996108022, -0.16622411456474478, -0.21415991582332086, 0.09881269759067254, 0.2519173545106085, 0.003835409924429531, -0.25894306619601876, -0.13056138186086327, 0.20503030864525984, 0.25708952886860403, -0.06132689583256175, -0.32682480205642195, -0.1898505489056874, 0.204255417852876, 0.46030483336153655, 0.4087945982176682, 0.20258409311989908, 0.04855955748920357},
      {-0.1950627672154919, 0.18787496205758922, 0.1547843763122804, -0.16650289147345113, -0.18572432989979948, 0.12888765160380716, 0.2247709672596732, -0.07208000004299314, -0.2597486267166745, -0.009816502779575804, 0.27841406960505144, 0.1259753377434044, -0.2550025052097473, -0.28727459612997036, 0.11575979705678954, 0.4733019768760521, 0.4378907648259931, 0.1745931101193713},
      {0.1646842214079654, -0.18968628741754362, -0.09697819943361526, 0.18990271836996236, 0.10126060060489867, -0.1882784410320476, -0.12032661400443907, 0.18478854871444947, 0.1489164464477187, -0.1779912595313549, -0.1885341447458486, 0.16426973653304616, 0.24544924893222458, -0.1334554991651644, -0.3360830261428407, 0.045979823523743475, 0.5154434704887982, 0.47107572329765507},
      {-0.14052973501759444, 0.18276252867314088, 0.05394352969727935, -0.1876337286781557, -0.03414007820884977, 0.19428551996168061, 0.025293041690012258, -0.20422363741360103, -0.020362640372008137, 0.2191596867532771, 0.017327973214924852, -0.24243624972460015, -0.015423762827525946, 0.282149653336705, 0.014382711025141999, -0.3655040899300745, -0.014397591317061472, 0.7114060581336181},
      {-0.14744522683854192, 0.21383791939320715, 0.020411965969415993, -0.21442765435424874, 0.029842053519723556, 0.21320146319273062, -0.07070727278259255, -0.21023575584555876, 0.11279317914557092, 0.20411394291479687, -0.16240678364725095, -0.19120958773755448, 0.22811278124366488, 0.16121301738250576, -0.32834539657879397, -0.0736027561324321, 0.5224364451486548, -0.4572510507187283},
      {-0.15048068294558997, 0.24681344740398622, -0.03444907391076375, -0.22411259864697705, 0.12358334307514889, 0.18368265559237115, -0.1936714960356057, -0.122419312920011, 0.25017407150915055, 0.03379904849671609, -0.28570812933332596, 0.09251643493507286, 0.27554428341361814, -0.2694933717776458, -0.14314274564982588, 0.47962085276418404, -0.42750043177413805, 0.1666324370496796},
      {-0.14489090168463756, 0.2699385165049137, -0.10726354085542399, -0.19223084874251753, 0.2206979161909464, 0.07246687377285428, -0.26890702661808163, 0.07757718150666217, 0.23840738877748827, -0.23253228746620433, -0.10198309798053004, 0.33237334503743193, -0.1612063120209902, -0.2312700746483176, 0.46456441161491024, -0.39849110209563743, 0.19348487631819278, -0.04567844274747134},
      {-0.133846049687218, 0.2828684157721197, -0.18978354648376627, -0.11025457089231769, 0.27910386601774745, -0.10511936632427313, -0.2062703413272849, 0.2763571524763834, -0.014770138800378732, -0.28264660689920396, 0.2888593848517146, 0.005694253853234556, -0.33297434448678165, 0.454304332174199, -0.35702031875752244, 0.18437722878650406, -0.06023035298439894, 0.009854664318804952},
      {-0.1182556235005056, 0.28249398900481526, -0.27077457147050166, 0.02383357071503926, 0.24760651726822291, -0.2771132354420736, 0.030265746869283284, 0.25758275541219194, -0.31995309140101474, 0.10466467693484946, 0.21292817177117795, -0.4167892759741609, 0.42339148046443226, -0.297778939405402, 0.15270822513877857, -0.05608434281760289, 0.013535189043253288, -0.0016554493580832879},
      {0.09842853760346854, -0.26458785556405434, 0.33336272346646656, -0.19496430829307998, -0.08356883524921403, 0.3064516339285748, -0.313110660240004, 0.1019107855527111, 0.1867803568379103, -0.39093419175761795, 0.43530337340936975, -0.35086031618537095, 0.2193056589241342, -0.10778521499907216, 0.04102979404706487, -0.011557381214258118, 0.0021765039980887464, -0.000208898405310164},
      {-0.07439228000678318, 0.22395170399793904, -0.3528355794857944, 0.35741580974589243, -0.20479767669202972, -0.04536274851347463, 0.2842657352495939, -0.4225856109179447, 0.43399820614980716, -0.35195783738807096, 0.23489874094044644, -0.1306325009728849, 0.060371607301935026, -0.0228390457397805, 0.006862773680758166, -0.0015504044259044402, 0.00023630785185151034, -1.8412279292180098e-05},
      {0.04571401016122355, -0.1533788675298501, 0.2922921111218519, -0.4128588714017737, 0.4739023857336679, -0.46101451305461305, 0.38826724708204363, -0.2861364747568756, 0.18528661019223866, -0.10535825856341373, 0.052352729537090345, -0.02252204459446614, 0.00826442937062511, -0.0025284807071248717, 0.0006224741978097725, -0.00011623687911459475, 1.472128759638521e-05, -9.548144257130663e-07}}},
};

}  // namespace oracle
