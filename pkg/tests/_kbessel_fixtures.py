# Frozen reference values for the normalized Macdonald function
# ktilde(alpha, x) = (x/2)**(-alpha) * K_alpha(x),
# generated once with mpmath at 50-digit precision.

KTILDE_REFERENCE = [
    (-1.5, 0.05, '0.44257769234461869520508563172'),
    (-1.5, 0.3, '0.426746485122192049251391852854'),
    (-1.5, 1.2, '0.293619062425829059915821253107'),
    (-1.5, 5.0, '0.0179140501585894524498575513622'),
    (-1.5, 17.0, '0.000000330203184847639466632482866755'),
    (-0.5, 0.05, '0.843005128275464181343020250895'),
    (-0.5, 0.3, '0.656533054034141614232910542853'),
    (-0.5, 1.2, '0.266926420387117327196201139188'),
    (-0.5, 5.0, '0.00597135005286315081661918378739'),
    (-0.5, 17.0, '0.0000000366892427608488296258314296395'),
    (0.0, 0.05, '3.11423402947198989391448498186'),
    (0.0, 0.3, '1.37246006054429737664488582444'),
    (0.0, 1.2, '0.318508220286593615117938855989'),
    (0.0, 5.0, '0.00369109833404259427473526100746'),
    (0.0, 17.0, '0.0000000124946640263177319109592943065'),
    (0.25, 0.05, '9.02268225268716312478904249569'),
    (0.25, 0.3, '2.32679720270735333149249134491'),
    (0.25, 1.2, '0.369114764604044440855133420004'),
    (0.25, 5.0, '0.00295228569910687510356912456262'),
    (0.25, 17.0, '0.00000000733071040972206762843161748637'),
    (0.5, 0.05, '33.7202051310185672537208100358'),
    (0.5, 0.3, '4.37688702689427742821940361902'),
    (0.5, 1.2, '0.444877367311862211993668565314'),
    (0.5, 5.0, '0.00238854002114526032664767351496'),
    (0.5, 17.0, '0.00000000431638150127633289715663878112'),
    (1.0, 0.05, '796.386973035300260427526406524'),
    (1.0, 0.3, '20.3732802230488331923367983507'),
    (1.0, 1.2, '0.724320651767858397502667269421'),
    (1.0, 5.0, '0.00161784537818086568334600873502'),
    (1.0, 17.0, '0.00000000151259313784313486739007153037'),
    (1.5, 0.05, '28324.9723100555964931254804301'),
    (1.5, 0.3, '126.443402999168014593004993438'),
    (1.5, 1.2, '1.35934751123069009220287617179'),
    (1.5, 5.0, '0.00114649921014972495679088328718'),
    (1.5, 17.0, '5.37680740643418630787678187267e-10'),
    (2.0, 0.05, '1279201.93130363560051430542641'),
    (2.0, 0.3, '966.477345937472469732519296673'),
    (2.0, 1.2, '2.89674686681792225727946145947'),
    (2.0, 5.0, '0.000849430993955753593293003158796'),
    (2.0, 17.0, '1.93872071476274972710717866255e-10'),
    (3.5, 0.05, '272180863445.068334118817426082'),
    (3.5, 0.3, '963851.763716734871353402166506'),
    (3.5, 1.2, '51.6906766160323442047684604888'),
    (3.5, 5.0, '0.000446370359151626249843917226475'),
    (3.5, 17.0, '9.89541601122412771547373986137e-12'),
    (5.0, 0.05, '125809461247786699.964551380842'),
    (5.0, 0.3, '2069321789.25059008211131719141'),
    (5.0, 1.2, '1816.09013399793329997350135524'),
    (5.0, 5.0, '0.000334912242811206224726361512673'),
    (5.0, 17.0, '5.73068333935182718936487962633e-13'),
]
