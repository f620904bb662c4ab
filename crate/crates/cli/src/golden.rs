//! Reference coefficient tables and norm constants, stored as the decimal
//! strings they were published with.

/// How a published norm constant relates to the exact value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    /// Printed value is the exact value rounded up at the printed digits.
    Up,
    /// Printed value is the exact value rounded to nearest.
    Nearest,
}

#[derive(Debug, Clone, Copy)]
pub struct Entry {
    pub index: usize,
    /// Decimal literal or `p/q` fraction.
    pub value: &'static str,
    /// Absolute tolerance overriding the table default.
    pub tolerance: Option<&'static str>,
}

#[derive(Debug, Clone, Copy)]
pub struct GoldenTable {
    pub id: &'static str,
    pub m: usize,
    pub n: usize,
    pub eta0: &'static str,
    pub entries: &'static [Entry],
    /// Absolute tolerance for entries without their own.
    pub tolerance: &'static str,
    /// Published `‖ℓ‖` constant and its rounding direction.
    pub norm: Option<(&'static str, Rounding)>,
    /// Entries are the left boundary layer `|C_β - h| > 1e-8` only.
    pub boundary_layer: bool,
}

const fn e(index: usize, value: &'static str) -> Entry {
    Entry {
        index,
        value,
        tolerance: None,
    }
}

const TABLE1: &[Entry] = &[
    e(0, "0.00177612633884071008"),
    e(1, "0.00319454403039647954"),
    e(2, "0.00337052181497334175"),
    e(3, "0.00332336870971015344"),
    e(4, "0.00333600334618604447"),
    e(5, "0.00333261790554566866"),
    e(6, "0.00333352503163128086"),
    e(7, "0.00333328196792920787"),
    e(8, "0.00333334709665188764"),
];

const TABLE2: &[Entry] = &[
    e(0, "0.00175247906611553142"),
    e(1, "0.00324264900163471085"),
    e(2, "0.00333892060971646866"),
    e(3, "0.00333236955552006215"),
    e(4, "0.00333368616893237390"),
    e(5, "0.00333318408917128015"),
    e(6, "0.00333339747877195358"),
    e(7, "0.00333330571886293306"),
    e(8, "0.00333334522322914572"),
];

const TABLE3: &[Entry] = &[
    e(0, "0.00174455012038852683"),
    e(1, "0.00326634746379700186"),
    e(2, "0.00330774531081996009"),
    e(3, "0.00335699483364953318"),
    e(4, "0.00331942429918189420"),
    e(5, "0.00334093116706873427"),
    e(6, "0.00332924765792690917"),
    e(7, "0.00333552260766573748"),
    e(8, "0.00333216117670071227"),
    e(9, "0.00333396080026924074"),
    e(10, "0.00333299745834218190"),
    e(11, "0.00333351312116039613"),
    e(12, "0.00333323709636443753"),
    e(13, "0.00333338484710726915"),
    e(14, "0.00333330575901727716"),
    e(15, "0.00333334809332522744"),
];

const TABLE4: &[Entry] = &[
    e(0, "0.00173901538774817543"),
    e(1, "0.00328716890432268279"),
    e(2, "0.00326911260567167412"),
    e(3, "0.00340205381465105221"),
    e(4, "0.00328232898469587043"),
    e(5, "0.00336635018632553123"),
    e(6, "0.00331284808226362786"),
    e(7, "0.00334587152301716133"),
    e(8, "0.00332569334718594541"),
    e(9, "0.00333798181479271212"),
    e(10, "0.00333050638482074723"),
    e(11, "0.00333505224863080752"),
    e(12, "0.00333228820948218315"),
    e(13, "0.00333396877152254017"),
    e(14, "0.00333294698744021598"),
    e(15, "0.00333356823085626853"),
    e(16, "0.00333319051620654561"),
    e(17, "0.00333342016578285375"),
    e(18, "0.00333328053942885252"),
    e(19, "0.00333336543188980042"),
    e(20, "0.00333331381749472885"),
    e(21, "0.00333334519891226771"),
];

const TABLE5: &[Entry] = &[
    e(0, "0.00173498886058381026"),
    e(1, "0.00330520593286011352"),
    e(2, "0.00322620390097277555"),
    e(3, "0.00346783504823977116"),
    e(4, "0.00321158077766250064"),
    e(5, "0.00342625617820782061"),
    e(6, "0.00326815998330420462"),
    e(7, "0.00337747643535115270"),
    e(8, "0.00330385537900635393"),
    e(9, "0.00335290464626403816"),
    e(10, "0.00332037008745176751"),
    e(11, "0.00334191131490927107"),
    Entry {
        index: 12,
        value: "0.003327659419014779572",
        tolerance: Some("5e-18"),
    },
    e(13, "0.00333708573208910388"),
    e(14, "0.00333085188184676641"),
    e(15, "0.00333497426498772165"),
    e(16, "0.00333224823220328272"),
    e(17, "0.00333405087626146100"),
    e(18, "0.00333285884589705156"),
    e(19, "0.00333364709595060379"),
    e(20, "0.00333312585271306499"),
    e(21, "0.00333347053324047546"),
    e(22, "0.00333324260768654442"),
    e(23, "0.00333339332712609729"),
    e(24, "0.00333329366147357165"),
    e(25, "0.00333335956698815529"),
    e(26, "0.00333331598590751689"),
    e(27, "0.00333334480459741380"),
];

const TABLE6: &[Entry] = &[
    e(0, "0.00173205877707359127"),
    e(1, "0.00332034204314634415"),
    e(2, "0.00318230520695443787"),
    e(3, "0.00355132503340265203"),
    e(4, "0.00309977448873935734"),
    e(5, "0.00354150500848728542"),
    e(6, "0.00316818905922230260"),
    e(7, "0.00345627307134070750"),
    e(8, "0.00324460285490503001"),
    e(9, "0.00339643943424144824"),
    e(10, "0.00328876219893682112"),
    e(11, "0.00336471020635444449"),
    e(12, "0.00331127918647367579"),
    e(13, "0.00334882331050388661"),
    e(14, "0.00332245757624453130"),
    e(15, "0.00334096810776062514"),
    e(16, "0.00332797414827915069"),
    e(17, "0.00333709504135639172"),
    e(18, "0.00333069296984364163"),
    e(19, "0.00333518660336370406"),
    e(20, "0.00333203252906371234"),
    e(21, "0.00333424636193460625"),
    e(22, "0.00333269248328614613"),
    e(23, "0.00333378314247101608"),
    e(24, "0.00333301761482745647"),
    e(25, "0.00333355493435702833"),
    e(26, "0.00333317779284220016"),
    e(27, "0.00333344250631211799"),
    e(28, "0.00333325670544635996"),
    e(29, "0.00333338711800696554"),
    e(30, "0.00333329558217999618"),
    e(31, "0.00333335983065088640"),
    e(32, "0.00333331473501844551"),
    e(33, "0.00333334638738364948"),
];

const TABLE7: &[Entry] = &[
    e(0, "0.00172995290066120350"),
    e(1, "0.00333261654096956311"),
    e(2, "0.00314030615358630034"),
    e(3, "0.00364680181687277409"),
    e(4, "0.00294599819613147818"),
    e(5, "0.00373067122924529534"),
    e(6, "0.00297727240591131934"),
    e(7, "0.00362534555471145307"),
    e(8, "0.00310592534617643848"),
    e(9, "0.00350552648624077583"),
    e(10, "0.00320487233533179992"),
    e(11, "0.00342842342134998057"),
    e(12, "0.00326323297211348103"),
    e(13, "0.00338490036159433393"),
    e(14, "0.00329544249146043423"),
    e(15, "0.00336115859898192848"),
    e(16, "0.00331290610817136431"),
    e(17, "0.00334832702306404860"),
    e(18, "0.00332232883088807872"),
    e(19, "0.00334140963871753226"),
    e(20, "0.00332740619898615369"),
    e(21, "0.00333768315455876029"),
    e(22, "0.00333014109574784269"),
    e(23, "0.00333567603784529139"),
    e(24, "0.00333161408331454461"),
    e(25, "0.00333459504509005457"),
    e(26, "0.00333240739717116319"),
    e(27, "0.00333401285268273812"),
    e(28, "0.00333283465264497077"),
    e(29, "0.00333369930144181951"),
    e(30, "0.00333306475936511862"),
    e(31, "0.00333353043240642612"),
    e(32, "0.00333318868772800817"),
    e(33, "0.00333343948477634317"),
    e(34, "0.00333325543170061418"),
    e(35, "0.00333339050320497157"),
    e(36, "0.00333329137793257419"),
    e(37, "0.00333336412325119880"),
    e(38, "0.00333331073745712191"),
    e(39, "0.00333334991582712020"),
    e(40, "0.00333332116389597219"),
];

const TABLE8: &[Entry] = &[
    e(0, "0.00172847784910360447"),
    e(1, "0.00334216427951079832"),
    e(2, "0.00310265417511838644"),
    e(3, "0.00374645947596537845"),
    e(4, "0.00275792168171570242"),
    e(5, "0.00400138156396844176"),
    e(6, "0.00266165221372250548"),
    e(7, "0.00394079887384133675"),
    e(8, "0.00282156182791894007"),
    e(9, "0.00374603753952685103"),
    e(10, "0.00300894501757551301"),
    e(11, "0.00358457992357594231"),
    e(12, "0.00314035977572450425"),
    e(13, "0.00348084679101216452"),
    e(14, "0.00322087398274449081"),
    e(15, "0.00341893779189990479"),
    e(16, "0.00326822729185132696"),
    e(17, "0.00338282511219261974"),
    e(18, "0.00329572154562808534"),
    e(19, "0.00336191228831355167"),
    e(20, "0.00331161983320458289"),
    e(21, "0.00334982981298158293"),
    e(22, "0.00332080076136125273"),
    e(23, "0.00334285432190737266"),
    e(24, "0.00332610031017101433"),
    e(25, "0.00333882817755420089"),
    e(26, "0.00332915897604222655"),
    e(27, "0.00333650452957059022"),
    e(28, "0.00333092422572131367"),
    e(29, "0.00333516349327706089"),
    e(30, "0.00333194299096395421"),
    e(31, "0.00333438955334958306"),
    e(32, "0.00333253094060154966"),
    e(33, "0.00333394289767582404"),
    e(34, "0.00333287025750894230"),
    e(35, "0.00333368512427696033"),
    e(36, "0.00333306608365147515"),
    e(37, "0.00333353635843483279"),
    e(38, "0.00333317909856898933"),
    e(39, "0.00333345050289666260"),
    e(40, "0.00333324432158157594"),
    e(41, "0.00333340095406794224"),
    e(42, "0.00333328196299562843"),
    e(43, "0.00333337235851711259"),
    e(44, "0.00333330368655589561"),
    e(45, "0.00333335585549280241"),
    e(46, "0.00333331622362661400"),
    e(47, "0.00333334633129049714"),
];

const TABLE9: &[Entry] = &[
    e(0, "0.00172749278862645234"),
    e(1, "0.00334915954552527705"),
    e(2, "0.00307141154907661477"),
    e(3, "0.00384087716305041600"),
    e(4, "0.00255327063613243166"),
    e(5, "0.00434013033335869961"),
    e(6, "0.00221013903097713541"),
    e(7, "0.00444946400666106578"),
    e(8, "0.00231492992409806705"),
    e(9, "0.00420985817056583358"),
    e(10, "0.00260680747387077026"),
    e(11, "0.00392158564879464832"),
    e(12, "0.00286380539858292753"),
    e(13, "0.00370486410231191268"),
    e(14, "0.00304088010987428129"),
    e(15, "0.00356281566915249473"),
    e(16, "0.00315360445472180508"),
    e(17, "0.00347393491400228088"),
    e(18, "0.00322341661691745051"),
    e(19, "0.00341922625493328018"),
    e(20, "0.00326623022080639272"),
    e(21, "0.00338574919280914013"),
    e(22, "0.00329239374555605829"),
    e(23, "0.00336530759722583348"),
    e(24, "0.00330836190455046297"),
    e(25, "0.00335283526564426801"),
    e(26, "0.00331810309402904888"),
    e(27, "0.00334522746373694056"),
    e(28, "0.00332404459372417715"),
    e(29, "0.00334058737008624209"),
    e(30, "0.00332766830567799599"),
    e(31, "0.00333775742286366819"),
    e(32, "0.00332987835336878476"),
    e(33, "0.00333603148905263082"),
    e(34, "0.00333122621755866373"),
    e(35, "0.00333497887821597101"),
    e(36, "0.00333204825076180440"),
    e(37, "0.00333433691406739092"),
    e(38, "0.00333254959049473769"),
    e(39, "0.00333394539453196409"),
    e(40, "0.00333285534630910409"),
    e(41, "0.00333370661560394268"),
    e(42, "0.00333304181986959795"),
    e(43, "0.00333356098973720558"),
    e(44, "0.00333315554587373269"),
    e(45, "0.00333347217581801177"),
    e(46, "0.00333322490478845213"),
    e(47, "0.00333341801022001505"),
    e(48, "0.00333326720521970105"),
    e(49, "0.00333338497584858724"),
    e(50, "0.00333329300329463880"),
    e(51, "0.00333336482893367433"),
    e(52, "0.00333330873695621772"),
    e(53, "0.00333335254178659839"),
    e(54, "0.00333331833256004469"),
    e(55, "0.00333334504813390320"),
];

const TABLE10: &[Entry] = &[
    e(0, "0.00172689334490066565"),
    e(1, "0.00335378561374918185"),
    e(2, "0.00304832508611045170"),
    e(3, "0.00391935697738649923"),
    e(4, "0.00236091789799528996"),
    e(5, "0.00470103221229688833"),
    e(6, "0.00166606164689116412"),
    e(7, "0.00513715438246413703"),
    e(8, "0.00155687727226540244"),
    e(9, "0.00496522549139354527"),
    e(10, "0.00190545757664787945"),
    e(11, "0.00454262920324724638"),
    e(12, "0.00233068337371350425"),
    e(13, "0.00415339159536806206"),
    e(14, "0.00266841337297767427"),
    e(15, "0.00386950335147916675"),
    e(16, "0.00290248747287229047"),
    e(17, "0.00367878243460793137"),
    e(18, "0.00305674037361827340"),
    e(19, "0.00355459988011267817"),
    e(20, "0.00315642482727045543"),
    e(21, "0.00347472666712902671"),
    e(22, "0.00322035045788260487"),
    e(23, "0.00342360164155868860"),
    e(24, "0.00326121936040494949"),
    e(25, "0.00339094085206410810"),
    e(26, "0.00328731578129565660"),
    e(27, "0.00337009186182822834"),
    e(28, "0.00330397127017939317"),
    e(29, "0.00335678702055923429"),
    e(30, "0.00331459921621225224"),
    e(31, "0.00334829754279374992"),
    e(32, "0.00332138043174862451"),
    e(33, "0.00334288089094969269"),
    e(34, "0.00332570708681864833"),
    e(35, "0.00333942490198512218"),
    e(36, "0.00332846761136009168"),
    e(37, "0.00333721989298164747"),
    e(38, "0.00333022889296381827"),
    e(39, "0.00333581304546978635"),
    e(40, "0.00333135263111543830"),
    e(41, "0.00333491544485158395"),
    e(42, "0.00333206960132156587"),
    e(43, "0.00333434275558700776"),
    e(44, "0.00333252704428838619"),
    e(45, "0.00333397736710399180"),
    e(46, "0.00333281890305696659"),
    e(47, "0.00333374424114699843"),
    e(48, "0.00333300511542151927"),
    e(49, "0.00333359550162011932"),
    e(50, "0.00333312392303583896"),
    e(51, "0.00333350060250695466"),
    e(52, "0.00333319972492547481"),
    e(53, "0.00333344005477077078"),
    e(54, "0.00333324808820998967"),
    e(55, "0.00333340142397405117"),
    e(56, "0.00333327894505666322"),
    e(57, "0.00333337677667015449"),
    e(58, "0.00333329863240825021"),
    e(59, "0.00333336105114438844"),
    e(60, "0.00333331119337459038"),
    e(61, "0.00333335101791066748"),
    e(62, "0.00333331920754931007"),
    e(63, "0.00333334461648534207"),
];

const TABLE11: &[Entry] = &[
    e(0, "0.00172660093000204434"),
    e(1, "0.00335622016635424541"),
    e(2, "0.00303488707201474333"),
    e(3, "0.00397016939076339731"),
    e(4, "0.00222172391357403828"),
    e(5, "0.00499378828442308939"),
    e(6, "0.00117134786383522544"),
    e(7, "0.00583516570203082313"),
    e(8, "0.00070537581513706783"),
    e(9, "0.00589276164637635086"),
    e(10, "0.00097691145372704574"),
    e(11, "0.00541764827809579119"),
    e(12, "0.00154000801804920969"),
    e(13, "0.00484769113306215419"),
    e(14, "0.00207043279270397406"),
    e(15, "0.00437783417724906036"),
    e(16, "0.00247418267818456252"),
    e(17, "0.00403747731479976406"),
    e(18, "0.00275760059774337822"),
    e(19, "0.00380333655344864095"),
    e(20, "0.00295003782640532812"),
    e(21, "0.00364570570477646406"),
    e(22, "0.00307887414398914889"),
    e(23, "0.00354055563717261057"),
    e(24, "0.00316461152396595462"),
    e(25, "0.00347069038125884784"),
    e(26, "0.00322151976711594156"),
    e(27, "0.00342434860282943662"),
    e(28, "0.00325925036543305965"),
    e(29, "0.00339363262285636622"),
    e(30, "0.00328425393283165749"),
    e(31, "0.00337328012014849898"),
    e(32, "0.00330081999773997306"),
    e(33, "0.00335979634546885836"),
    e(34, "0.00331179481824981668"),
    e(35, "0.00335086371649026079"),
    e(36, "0.00331906522131345626"),
    e(37, "0.00334494624845792310"),
    e(38, "0.00332388150649666917"),
    e(39, "0.00334102623365402826"),
    e(40, "0.00332707203566076212"),
    e(41, "0.00333842944024015643"),
    e(42, "0.00332918558244974745"),
    e(43, "0.00333670921153828293"),
    e(44, "0.00333058568684464716"),
    e(45, "0.00333556965838687970"),
    e(46, "0.00333151317572930858"),
    e(47, "0.00333481476987879354"),
    e(48, "0.00333212758377888206"),
    e(49, "0.00333431469968656027"),
    e(50, "0.00333253459373417958"),
    e(51, "0.00333398343198778386"),
    e(52, "0.00333280421438103343"),
    e(53, "0.00333376398622498520"),
    e(54, "0.00333298282252256406"),
    e(55, "0.00333361861605357889"),
    e(56, "0.00333310114012289132"),
    e(57, "0.00333352231669313408"),
    e(58, "0.00333317951871399489"),
    e(59, "0.00333345852391701871"),
    e(60, "0.00333323144001324420"),
    e(61, "0.00333341626487956293"),
    e(62, "0.00333326583488148334"),
    e(63, "0.00333338827070287737"),
    e(64, "0.00333328861949931687"),
    e(65, "0.00333336972617429080"),
    e(66, "0.00333330371299542040"),
    e(67, "0.00333335744149293259"),
    e(68, "0.00333331371156666169"),
    e(69, "0.00333334930359957163"),
    e(70, "0.00333332033504383217"),
    e(71, "0.00333334391271425501"),
];

const TABLE12: &[Entry] = &[
    e(0, "0.00172655548945567044"),
    e(1, "0.00335662901376447258"),
    e(2, "0.00303238425807657517"),
    e(3, "0.00398073517633032120"),
    e(4, "0.00218920482037733280"),
    e(5, "0.00507104524959419857"),
    e(6, "0.00102336156051060256"),
    e(7, "0.00607199798241084696"),
    e(8, "0.00037867881870999653"),
    e(9, "0.00629239692582258769"),
    e(10, "0.00053211065682692867"),
    e(11, "0.00587832107921238828"),
    e(12, "0.00108774569344314697"),
    e(13, "0.00527471154107237576"),
    e(14, "0.00167844383373434332"),
    e(15, "0.00473043759244898944"),
    e(16, "0.00216162520663729902"),
    e(17, "0.00431159258197410437"),
    e(18, "0.00251908554798301532"),
    e(19, "0.00400965449172913550"),
    e(20, "0.00277237192137831871"),
    e(21, "0.00379816301931711370"),
    e(22, "0.00294841399870425801"),
    e(23, "0.00365193776947454155"),
    e(24, "0.00306969888569782702"),
    e(25, "0.00355143697213385530"),
    e(26, "0.00315292244059992812"),
    e(27, "0.00348255132276115587"),
    e(28, "0.00320992302093593156"),
    e(29, "0.00343539498005851424"),
    e(30, "0.00324892979162245131"),
    e(31, "0.00340313244846696006"),
    e(32, "0.00327561242680296621"),
    e(33, "0.00338106562394459128"),
    e(34, "0.00329386137938002601"),
    e(35, "0.00336597430528210186"),
    e(36, "0.00330634125957574669"),
    e(37, "0.00335565407117066211"),
    e(38, "0.00331487552014629517"),
    e(39, "0.00334859674230775176"),
    e(40, "0.00332071149652304087"),
    e(41, "0.00334377075895046149"),
    e(42, "0.00332470227406376349"),
    e(43, "0.00334047064592444503"),
    e(44, "0.00332743125080413949"),
    e(45, "0.00333821396235558649"),
    e(46, "0.00332929737855920021"),
    e(47, "0.00333667079868275828"),
    e(48, "0.00333057347222005968"),
    e(49, "0.00333561555424564661"),
    e(50, "0.00333144608900867865"),
    e(51, "0.00333489395837593862"),
    e(52, "0.00333204280063615644"),
    e(53, "0.00333440051769216630"),
    e(54, "0.00333245084313764205"),
    e(55, "0.00333406309378899346"),
    e(56, "0.00333272987017358315"),
    e(57, "0.00333383235706368672"),
    e(58, "0.00333292067403627449"),
    e(59, "0.00333367457501187563"),
    e(60, "0.00333305114925564172"),
    e(61, "0.00333356668071934869"),
    e(62, "0.00333314037062970202"),
    e(63, "0.00333349290060179606"),
    e(64, "0.00333320138185937509"),
    e(65, "0.00333344244838961507"),
    e(66, "0.00333324310246929006"),
    e(67, "0.00333340794823161848"),
    e(68, "0.00333327163179578226"),
    e(69, "0.00333338435638400590"),
    e(70, "0.00333329114067812168"),
    e(71, "0.00333336822384125740"),
    e(72, "0.00333330448121352504"),
    e(73, "0.00333335719210945782"),
    e(74, "0.00333331360371894311"),
    e(75, "0.00333334964840674512"),
    e(76, "0.00333331984185726252"),
    e(77, "0.00333334448988298376"),
];

const TABLE13: &[Entry] = &[
    e(0, "0.00172671049778565797"),
    e(1, "0.00335516395507917580"),
    e(2, "0.00304193627584372803"),
    e(3, "0.00393776327125170017"),
    e(4, "0.00233007712879415692"),
    e(5, "0.00471527133757507641"),
    e(6, "0.00174497854628782157"),
    e(7, "0.00485675294324682823"),
    e(8, "0.00212747598467839435"),
    e(9, "0.00408453051443764890"),
    e(10, "0.00303849317411607795"),
    e(11, "0.00326150825980108299"),
    e(12, "0.00365086987677036012"),
    e(13, "0.00288027997265296082"),
    e(14, "0.00383972630105596425"),
    e(15, "0.00282694633373975373"),
    e(16, "0.00380915983064439615"),
    e(17, "0.00290295426940039930"),
    e(18, "0.00371316819510743415"),
    e(19, "0.00300351110208944757"),
    e(20, "0.00361660703987917620"),
    e(21, "0.00309185019337987811"),
    e(22, "0.00353813630227038258"),
    e(23, "0.00316025452220934915"),
    e(24, "0.00347924238639198785"),
    e(25, "0.00321053936117372331"),
    e(26, "0.00343655097788938971"),
    e(27, "0.00324664320823834275"),
    e(28, "0.00340610011591843955"),
    e(29, "0.00327227842278880512"),
    e(30, "0.00338454689233366739"),
    e(31, "0.00329038332124877627"),
    e(32, "0.00336934817236508896"),
    e(33, "0.00330313676378294222"),
    e(34, "0.00335864987188439309"),
    e(35, "0.00331210917522999367"),
    e(36, "0.00335112604866268579"),
    e(37, "0.00331841762354822903"),
    e(38, "0.00334583703432045650"),
    e(39, "0.00332285171576454862"),
    e(40, "0.00334211980668418472"),
    e(41, "0.00332596789711823063"),
    e(42, "0.00333950753291683119"),
    e(43, "0.00332815772174759486"),
    e(44, "0.00333767185593130795"),
    e(45, "0.00332969651611532286"),
    e(46, "0.00333638193499156475"),
    e(47, "0.00333077781143822645"),
    e(48, "0.00333547552503919473"),
    e(49, "0.00333153762035049978"),
    e(50, "0.00333483860682981228"),
    e(51, "0.00333207152369661671"),
    e(52, "0.00333439105698931688"),
    e(53, "0.00333244668671512832"),
    e(54, "0.00333407657300585164"),
    e(55, "0.00333271030587360587"),
    e(56, "0.00333385559179154898"),
    e(57, "0.00333289554541894104"),
    e(58, "0.00333370031303950707"),
    e(59, "0.00333302570925529457"),
    e(60, "0.00333359120201437040"),
    e(61, "0.00333311717256726671"),
    e(62, "0.00333351453205997142"),
    e(63, "0.00333318144185430803"),
    e(64, "0.00333346065774556324"),
    e(65, "0.00333322660248814852"),
    e(66, "0.00333342280143380223"),
    e(67, "0.00333325833588546756"),
    e(68, "0.00333339620062519364"),
    e(69, "0.00333328063425493357"),
    e(70, "0.00333337750881443832"),
    e(71, "0.00333329630283508029"),
    e(72, "0.00333336437448481488"),
    e(73, "0.00333330731280618138"),
    e(74, "0.00333335514527654166"),
    e(75, "0.00333331504927383940"),
    e(76, "0.00333334866011226255"),
    e(77, "0.00333332048552169609"),
    e(78, "0.00333334410312812365"),
    e(79, "0.00333332430545503779"),
    e(80, "0.00333334090103430680"),
    e(81, "0.00333332698963926159"),
    e(82, "0.00333333865099250313"),
    e(83, "0.00333332887575723863"),
    e(84, "0.00333333706993697896"),
    e(85, "0.00333333020109139106"),
    e(86, "0.00333333595896358890"),
    e(87, "0.00333333113237492521"),
    e(88, "0.00333333517830670844"),
];

const TABLE14: &[Entry] = &[
    e(0, "0.00172702945455083193"),
    e(1, "0.00335196263611974402"),
    e(2, "0.00306452563504523993"),
    e(3, "0.00382735744574236094"),
    e(4, "0.00272471104016856072"),
    e(5, "0.00362523740203732478"),
    e(6, "0.00416828584678143709"),
    e(7, "0.00038025393759564147"),
    e(8, "0.00918605541537786417"),
    e(9, "-0.0056482216521837456"),
    e(10, "0.01503979792439844429"),
    e(11, "-0.0102513216994999018"),
    e(12, "0.01780870154874396918"),
    e(13, "-0.0111516599198095529"),
    e(14, "0.01717584313564491950"),
    e(15, "-0.0094596822947696162"),
    e(16, "0.01487372890505018792"),
    e(17, "-0.0068972585187668098"),
    e(18, "0.01228998089227584958"),
    e(19, "-0.0044379368869592209"),
    e(20, "0.01003287196894858974"),
    e(21, "-0.0024157213542609094"),
    e(22, "0.00825049420457872496"),
    e(23, "-0.0008623772730946671"),
    e(24, "0.00690738675157999725"),
    e(25, "0.00029252137237138985"),
    e(26, "0.00591821410669587006"),
    e(27, "0.00113739105014957971"),
    e(28, "0.00519802682335201819"),
    e(29, "0.00175042759986189166"),
    e(30, "0.00467672632259750788"),
    e(31, "0.00219339925074939015"),
    e(32, "0.00430050875356561753"),
    e(33, "0.00251280401810681106"),
    e(34, "0.00402940935773975411"),
    e(35, "0.00274285983082156931"),
    e(36, "0.00383420982729031424"),
    e(37, "0.00290846808379631022"),
    e(38, "0.00369371677971561177"),
    e(39, "0.00302764878602438014"),
    e(40, "0.00359261903731864099"),
    e(41, "0.00311340503994861123"),
    e(42, "0.00351987755666928677"),
    e(43, "0.00317510611508734637"),
    e(44, "0.00346754171514042525"),
    e(45, "0.00321949791378515819"),
    e(46, "0.00342988831851899784"),
    e(47, "0.00325143564488660772"),
    e(48, "0.00340279870089829129"),
    e(49, "0.00327441304627985970"),
    e(50, "0.003383309304493717340"),
    e(51, "0.00329094390700659850"),
    e(52, "0.00336928787611088775"),
    e(53, "0.00330283683648456223"),
    e(54, "0.00335920033583227050"),
    e(55, "0.00331139305001559083"),
    e(56, "0.00335194298912504867"),
    e(57, "0.00331754870221566789"),
    e(58, "0.00334672179022929618"),
    e(59, "0.00332197730137501015"),
    e(60, "0.00334296547103844503"),
    e(61, "0.00332516339541746467"),
    e(62, "0.00334026303961781421"),
    e(63, "0.00332745558621977111"),
    e(64, "0.00333831881318149643"),
    e(65, "0.00332910467075450735"),
    e(66, "0.00333692006675210665"),
    e(67, "0.00333029108147133945"),
    e(68, "0.00333591375827837438"),
    e(69, "0.00333114462799414914"),
    e(70, "0.00333518978378703653"),
    e(71, "0.00333175870004468364"),
    e(72, "0.00333466893051466329"),
    e(73, "0.00333220048555005048"),
    e(74, "0.00333429420994935355"),
    e(75, "0.00333251832192158444"),
    e(76, "0.00333402462250633817"),
    e(77, "0.00333274698483095824"),
    e(78, "0.00333383067161036060"),
    e(79, "0.00333291149314649690"),
    e(80, "0.00333369113636488924"),
    e(81, "0.00333302984634137357"),
    e(82, "0.00333359074969419812"),
    e(83, "0.00333311499388354665"),
    e(84, "0.00333351852791527129"),
    e(85, "0.00333317625208569821"),
    e(86, "0.00333346656897177222"),
    e(87, "0.00333322032343801599"),
    e(88, "0.00333342918784036036"),
    e(89, "0.00333325202995283771"),
    e(90, "0.00333340229451091797"),
    e(91, "0.00333327484075914716"),
    e(92, "0.00333338294648316812"),
    e(93, "0.00333329125167301758"),
    e(94, "0.00333336902681665769"),
    e(95, "0.00333330305827423077"),
    e(96, "0.00333335901250834411"),
    e(97, "0.00333331155236741126"),
    e(98, "0.00333335180785510696"),
    e(99, "0.00333331766332322668"),
    e(100, "0.0033333466245687503"),
    e(101, "0.0033333220597643263"),
];

const SARD_N2: &[Entry] = &[
    e(0, "3/16"),
    e(1, "10/16"),
    e(2, "3/16"),
];

const SARD_N3: &[Entry] = &[
    e(0, "4/30"),
    e(1, "11/30"),
    e(2, "11/30"),
    e(3, "4/30"),
];

const SARD_N4: &[Entry] = &[
    e(0, "11/112"),
    e(1, "32/112"),
    e(2, "26/112"),
    e(3, "32/112"),
    e(4, "11/112"),
];

const SARD_N5: &[Entry] = &[
    e(0, "15/190"),
    e(1, "43/190"),
    e(2, "37/190"),
    e(3, "37/190"),
    e(4, "43/190"),
    e(5, "15/190"),
];

const SHIFTED_N2: &[Entry] = &[
    e(0, "0.27075812274368231046"),
    e(1, "0.45848375451263537906"),
    e(2, "0.27075812274368231046"),
];

const SHIFTED_N3: &[Entry] = &[
    e(0, "0.17683465959328028293"),
    e(1, "0.32316534040671971706"),
    e(2, "0.32316534040671971706"),
    e(3, "0.17683465959328028293"),
];

const SHIFTED_N4: &[Entry] = &[
    e(0, "0.13336566440349175557"),
    e(1, "0.23884578079534432589"),
    e(2, "0.25557710960232783705"),
    e(3, "0.23884578079534432589"),
    e(4, "0.13336566440349175557"),
];

const SHIFTED_N5: &[Entry] = &[
    e(0, "0.10653409090909090909"),
    e(1, "0.19183238636363636363"),
    e(2, "0.20163352272727272727"),
    e(3, "0.20163352272727272727"),
    e(4, "0.19183238636363636363"),
    e(5, "0.10653409090909090909"),
];

pub const TABLES: &[GoldenTable] = &[
    GoldenTable {
        id: "table1",
        m: 2,
        n: 300,
        eta0: "0.205",
        entries: TABLE1,
        tolerance: "5e-19",
        norm: None,
        boundary_layer: true,
    },
    GoldenTable {
        id: "table2",
        m: 3,
        n: 300,
        eta0: "0.205",
        entries: TABLE2,
        tolerance: "5e-19",
        norm: None,
        boundary_layer: true,
    },
    GoldenTable {
        id: "table3",
        m: 4,
        n: 300,
        eta0: "0.205",
        entries: TABLE3,
        tolerance: "5e-19",
        norm: None,
        boundary_layer: true,
    },
    GoldenTable {
        id: "table4",
        m: 5,
        n: 300,
        eta0: "0.205",
        entries: TABLE4,
        tolerance: "5e-19",
        norm: None,
        boundary_layer: true,
    },
    GoldenTable {
        id: "table5",
        m: 6,
        n: 300,
        eta0: "0.205",
        entries: TABLE5,
        tolerance: "5e-19",
        norm: None,
        boundary_layer: true,
    },
    GoldenTable {
        id: "table6",
        m: 7,
        n: 300,
        eta0: "0.205",
        entries: TABLE6,
        tolerance: "5e-19",
        norm: None,
        boundary_layer: true,
    },
    GoldenTable {
        id: "table7",
        m: 8,
        n: 300,
        eta0: "0.205",
        entries: TABLE7,
        tolerance: "5e-19",
        norm: None,
        boundary_layer: true,
    },
    GoldenTable {
        id: "table8",
        m: 9,
        n: 300,
        eta0: "0.205",
        entries: TABLE8,
        tolerance: "5e-19",
        norm: None,
        boundary_layer: true,
    },
    GoldenTable {
        id: "table9",
        m: 10,
        n: 300,
        eta0: "0.205",
        entries: TABLE9,
        tolerance: "5e-19",
        norm: None,
        boundary_layer: true,
    },
    GoldenTable {
        id: "table10",
        m: 11,
        n: 300,
        eta0: "0.205",
        entries: TABLE10,
        tolerance: "5e-19",
        norm: None,
        boundary_layer: true,
    },
    GoldenTable {
        id: "table11",
        m: 12,
        n: 300,
        eta0: "0.205",
        entries: TABLE11,
        tolerance: "5e-19",
        norm: None,
        boundary_layer: true,
    },
    GoldenTable {
        id: "table12",
        m: 13,
        n: 300,
        eta0: "0.205",
        entries: TABLE12,
        tolerance: "5e-19",
        norm: None,
        boundary_layer: true,
    },
    GoldenTable {
        id: "table13",
        m: 14,
        n: 300,
        eta0: "0.205",
        entries: TABLE13,
        tolerance: "5e-19",
        norm: None,
        boundary_layer: true,
    },
    GoldenTable {
        id: "table14",
        m: 15,
        n: 300,
        eta0: "0.205",
        entries: TABLE14,
        tolerance: "5e-19",
        norm: None,
        boundary_layer: true,
    },
    GoldenTable {
        id: "sard_n2",
        m: 2,
        n: 2,
        eta0: "0",
        entries: SARD_N2,
        tolerance: "1e-30",
        norm: Some(("0.01398", Rounding::Up)),
        boundary_layer: false,
    },
    GoldenTable {
        id: "sard_n3",
        m: 2,
        n: 3,
        eta0: "0",
        entries: SARD_N3,
        tolerance: "1e-30",
        norm: Some(("0.00586", Rounding::Up)),
        boundary_layer: false,
    },
    GoldenTable {
        id: "sard_n4",
        m: 2,
        n: 4,
        eta0: "0",
        entries: SARD_N4,
        tolerance: "1e-30",
        norm: Some(("0.00305", Rounding::Up)),
        boundary_layer: false,
    },
    GoldenTable {
        id: "sard_n5",
        m: 2,
        n: 5,
        eta0: "0",
        entries: SARD_N5,
        tolerance: "1e-30",
        norm: Some(("0.00188", Rounding::Up)),
        boundary_layer: false,
    },
    GoldenTable {
        id: "shifted_n2",
        m: 2,
        n: 2,
        eta0: "0.205",
        entries: SHIFTED_N2,
        tolerance: "1e-18",
        norm: Some(("0.00694814", Rounding::Nearest)),
        boundary_layer: false,
    },
    GoldenTable {
        id: "shifted_n3",
        m: 2,
        n: 3,
        eta0: "0.205",
        entries: SHIFTED_N3,
        tolerance: "1e-18",
        norm: Some(("0.00340515", Rounding::Nearest)),
        boundary_layer: false,
    },
    GoldenTable {
        id: "shifted_n4",
        m: 2,
        n: 4,
        eta0: "0.205",
        entries: SHIFTED_N4,
        tolerance: "1e-18",
        norm: Some(("0.0020343", Rounding::Nearest)),
        boundary_layer: false,
    },
    GoldenTable {
        id: "shifted_n5",
        m: 2,
        n: 5,
        eta0: "0.205",
        entries: SHIFTED_N5,
        tolerance: "1e-18",
        norm: Some(("0.0013408", Rounding::Nearest)),
        boundary_layer: false,
    },
];

pub fn find(id: &str) -> Option<&'static GoldenTable> {
    TABLES.iter().find(|t| t.id == id)
}
