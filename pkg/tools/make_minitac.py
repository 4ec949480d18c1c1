"""Write the mini benchmark fixture: a 100-entity KB dump, 40 queries and gold labels.

Usage: python tools/make_minitac.py tests/fixtures/minitac
"""
import json
import sys
from pathlib import Path

# (id, name, aliases, links, text)
ENTITIES = [
    # physics
    ("Albert_Einstein", "Albert Einstein", ["Einstein"],
     ["Ulm", "Mileva_Maric", "Hans_Albert_Einstein", "ETH_Zurich", "Theory_of_relativity",
      "Nobel_Prize_in_Physics", "Princeton_University", "Max_Planck", "Niels_Bohr"],
     "Albert Einstein was a theoretical physicist born in Ulm in the Kingdom of Wurttemberg. "
     "Einstein developed the theory of relativity and received the Nobel Prize in Physics for the "
     "photoelectric effect. He studied at ETH Zurich, married Mileva Maric and later worked at "
     "Princeton. Einstein debated quantum theory with Niels Bohr."),
    ("Ulm", "Ulm", [],
     ["Danube", "Baden-Wurttemberg", "Ulm_Minster"],
     "Ulm is a city on the river Danube in Baden-Wurttemberg, Germany. Ulm is known for Ulm Minster, "
     "the church with the tallest steeple in the world. The physicist Albert Einstein was born in Ulm "
     "in 1879."),
    ("Ulm_Minster", "Ulm Minster", [],
     ["Ulm"],
     "Ulm Minster is a Lutheran church in Ulm with the tallest church steeple in the world. "
     "Construction of the gothic minster began in 1377."),
    ("Danube", "Danube", ["Danube River"],
     ["Ulm"],
     "The Danube is the second longest river in Europe. It flows through Ulm, Vienna and Budapest "
     "before reaching the Black Sea."),
    ("Baden-Wurttemberg", "Baden-Wurttemberg", [],
     ["Ulm"],
     "Baden-Wurttemberg is a state in southwest Germany. Its capital is Stuttgart and other cities "
     "include Ulm, Heidelberg and Freiburg."),
    ("Mileva_Maric", "Mileva Maric", ["Mileva"],
     ["Albert_Einstein", "ETH_Zurich", "Hans_Albert_Einstein", "Ulm"],
     "Mileva Maric was a Serbian physicist and mathematician. She studied physics at ETH Zurich where "
     "she met Albert Einstein, a student born in Ulm, and became Einstein's first wife. Their son was "
     "Hans Albert Einstein."),
    ("Hans_Albert_Einstein", "Hans Albert Einstein", ["Einstein"],
     ["Albert_Einstein", "Mileva_Maric", "ETH_Zurich", "Ulm"],
     "Hans Albert Einstein was a Swiss American professor of hydraulic engineering at the University "
     "of California, Berkeley. He was the son of Albert Einstein and Mileva Maric and studied civil "
     "engineering at ETH Zurich. He studied sediment transport in rivers."),
    ("ETH_Zurich", "ETH Zurich", ["Swiss Federal Institute of Technology"],
     ["Albert_Einstein", "Mileva_Maric"],
     "ETH Zurich is a public research university in Zurich, Switzerland. Its students included "
     "Albert Einstein and Mileva Maric."),
    ("Theory_of_relativity", "Theory of relativity", ["relativity"],
     ["Albert_Einstein", "Max_Planck"],
     "The theory of relativity comprises special relativity and general relativity, proposed by "
     "Albert Einstein in 1905 and 1915. It describes space, time and gravitation."),
    ("Nobel_Prize_in_Physics", "Nobel Prize in Physics", [],
     ["Albert_Einstein", "Max_Planck", "Niels_Bohr"],
     "The Nobel Prize in Physics is awarded yearly by the Royal Swedish Academy of Sciences. Laureates "
     "include Max Planck, Albert Einstein and Niels Bohr."),
    ("Max_Planck", "Max Planck", ["Planck"],
     ["Albert_Einstein", "Nobel_Prize_in_Physics", "Theory_of_relativity"],
     "Max Planck was a German theoretical physicist whose discovery of energy quanta founded quantum "
     "theory. Planck won the Nobel Prize in Physics in 1918 and supported Einstein's relativity."),
    ("Niels_Bohr", "Niels Bohr", ["Bohr"],
     ["Albert_Einstein", "Nobel_Prize_in_Physics"],
     "Niels Bohr was a Danish physicist who made foundational contributions to atomic structure and "
     "quantum theory. Bohr received the Nobel Prize in Physics in 1922 and debated Einstein."),
    ("Princeton_University", "Princeton University", ["Princeton"],
     ["Albert_Einstein"],
     "Princeton University is a private Ivy League research university in Princeton, New Jersey. "
     "Einstein worked at the nearby Institute for Advanced Study."),
    ("Planck_(spacecraft)", "Planck (spacecraft)", ["Planck"],
     ["European_Space_Agency"],
     "Planck was a space observatory operated by the European Space Agency from 2009 to 2013. The "
     "satellite mapped the cosmic microwave background at microwave and infrared frequencies."),
    ("European_Space_Agency", "European Space Agency", ["ESA"],
     ["Planck_(spacecraft)"],
     "The European Space Agency is an intergovernmental organisation dedicated to space exploration. "
     "Its missions include the Planck satellite and the Rosetta comet probe."),

    # Led Zeppelin
    ("Led_Zeppelin", "Led Zeppelin", ["Zeppelin"],
     ["Jimmy_Page", "Robert_Plant", "John_Bonham", "John_Paul_Jones_(musician)", "Kashmir_(song)",
      "Stairway_to_Heaven", "Physical_Graffiti", "Knebworth_Festival_1979", "Gibson_Les_Paul"],
     "Led Zeppelin were an English rock band formed in London in 1968 by guitarist Jimmy Page, singer "
     "Robert Plant, bassist John Paul Jones and drummer John Bonham. Songs include Stairway to Heaven "
     "and Kashmir from the album Physical Graffiti. The band played Knebworth in 1979."),
    ("Jimmy_Page", "Jimmy Page", [],
     ["Led_Zeppelin", "Gibson_Les_Paul", "Kashmir_(song)", "Knebworth_Festival_1979",
      "Stairway_to_Heaven", "Robert_Plant"],
     "Jimmy Page is an English guitarist and founder of Led Zeppelin. Page played a Gibson Les Paul "
     "guitar in alternate tunings, including the DADGAD tuning used for Kashmir. Page played "
     "Knebworth with the band in 1979."),
    ("Robert_Plant", "Robert Plant", ["Plant"],
     ["Led_Zeppelin", "Jimmy_Page", "Kashmir_(song)", "Stairway_to_Heaven", "Knebworth_Festival_1979"],
     "Robert Plant is an English singer and songwriter, the lead vocalist of Led Zeppelin. Plant wrote "
     "the lyrics of Kashmir and Stairway to Heaven."),
    ("John_Bonham", "John Bonham", ["Bonham"],
     ["Led_Zeppelin", "Kashmir_(song)", "Knebworth_Festival_1979"],
     "John Bonham was the drummer of the rock band Led Zeppelin, famous for power and speed. He played "
     "his last large concerts with the band at Knebworth in 1979."),
    ("John_Paul_Jones_(musician)", "John Paul Jones", ["John Paul Jones"],
     ["Led_Zeppelin", "Kashmir_(song)", "Knebworth_Festival_1979"],
     "John Paul Jones is an English musician, bassist and keyboardist of the rock band Led Zeppelin. "
     "He arranged strings and played mellotron on Kashmir."),
    ("Kashmir_(song)", "Kashmir (song)", ["Kashmir"],
     ["Led_Zeppelin", "Physical_Graffiti", "Jimmy_Page", "Robert_Plant", "Knebworth_Festival_1979"],
     "Kashmir is a song by the rock band Led Zeppelin from the album Physical Graffiti. Jimmy Page "
     "played the riff in DADGAD tuning and Robert Plant wrote the lyrics. The band played Kashmir live "
     "at Knebworth in 1979."),
    ("Stairway_to_Heaven", "Stairway to Heaven", [],
     ["Led_Zeppelin", "Jimmy_Page", "Robert_Plant"],
     "Stairway to Heaven is a rock song by Led Zeppelin released in 1971. Jimmy Page played the guitar "
     "solo and Robert Plant wrote the lyrics."),
    ("Physical_Graffiti", "Physical Graffiti", [],
     ["Led_Zeppelin", "Kashmir_(song)", "Jimmy_Page"],
     "Physical Graffiti is the sixth album by the rock band Led Zeppelin, a double album released in "
     "1975. It includes the song Kashmir."),
    ("Knebworth_Festival_1979", "Knebworth Festival 1979", ["Knebworth", "Knebworth Festival"],
     ["Led_Zeppelin", "Jimmy_Page", "Knebworth_House", "Kashmir_(song)", "Robert_Plant"],
     "The Knebworth Festival 1979 was a rock concert series in the park of Knebworth House where Led "
     "Zeppelin played two large shows in August 1979. Jimmy Page played Kashmir and Stairway to Heaven "
     "before a crowd of over 100,000 rock fans."),
    ("Gibson_Les_Paul", "Gibson Les Paul", ["Les Paul"],
     ["Les_Paul", "Jimmy_Page", "Led_Zeppelin", "Knebworth_Festival_1979"],
     "The Gibson Les Paul is a solid body electric guitar first sold in 1952. Jimmy Page of Led "
     "Zeppelin played a Les Paul guitar with unusual tunings on stage, including at Knebworth, and the "
     "guitar is uniquely associated with rock music."),
    ("Les_Paul", "Les Paul", [],
     ["Gibson_Les_Paul", "Mary_Ford"],
     "Les Paul was an American jazz and country guitarist, songwriter and inventor. He pioneered the "
     "solid body electric guitar and multitrack recording, and performed with his wife Mary Ford."),
    ("Mary_Ford", "Mary Ford", [],
     ["Les_Paul"],
     "Mary Ford was an American singer and guitarist who performed with her husband Les Paul in the "
     "1950s. Their hits included How High the Moon."),

    # South Asia
    ("Kashmir", "Kashmir", ["Kashmir Valley", "Kashmir region"],
     ["Srinagar", "Jammu", "Ladakh", "Himalayas", "India", "Pakistan", "Kashmir_conflict", "Dal_Lake"],
     "Kashmir is the northernmost geographical region of the Indian subcontinent, a valley between the "
     "Himalayas and the Pir Panjal range. The region is administered by India, Pakistan and China and "
     "includes Jammu, Ladakh and the city of Srinagar."),
    ("Srinagar", "Srinagar", [],
     ["Kashmir", "Dal_Lake", "India"],
     "Srinagar is the largest city of the Kashmir valley and lies on the banks of the Jhelum river. "
     "Srinagar is known for Dal Lake, its houseboats and Mughal gardens."),
    ("Jammu", "Jammu", [],
     ["Kashmir", "India"],
     "Jammu is the winter capital of the union territory of Jammu and Kashmir in India. The city lies "
     "on the Tawi river and is called the City of Temples."),
    ("Ladakh", "Ladakh", [],
     ["Kashmir", "Himalayas", "India"],
     "Ladakh is a high altitude region in India, part of the larger Kashmir region, between the "
     "Himalayas and the Karakoram mountains. Leh is its largest town."),
    ("Himalayas", "Himalayas", ["Himalaya"],
     ["India", "Pakistan", "Kashmir", "Mount_Everest"],
     "The Himalayas are a mountain range in Asia separating the Indo-Gangetic plain from the Tibetan "
     "plateau. The range includes Mount Everest and stretches across India, Nepal, Pakistan and "
     "Kashmir."),
    ("Mount_Everest", "Mount Everest", ["Everest"],
     ["Himalayas"],
     "Mount Everest is the highest mountain above sea level on Earth, located in the Mahalangur Himal "
     "of the Himalayas on the border of Nepal and China."),
    ("Indus_River", "Indus River", ["Indus"],
     ["Pakistan", "Ladakh", "Kashmir"],
     "The Indus is a transboundary river of Asia flowing from Tibet through Ladakh and Kashmir into "
     "Pakistan and the Arabian Sea."),
    ("India", "India", ["Republic of India"],
     ["Pakistan", "Kashmir", "Himalayas"],
     "India is a country in South Asia and the most populous democracy in the world. Its capital is "
     "New Delhi. India borders Pakistan, China and Nepal and administers part of Kashmir."),
    ("Pakistan", "Pakistan", [],
     ["India", "Kashmir", "Indus_River"],
     "Pakistan is a country in South Asia with its capital at Islamabad. The Indus river flows through "
     "Pakistan, which administers part of Kashmir and borders India."),
    ("Kashmir_conflict", "Kashmir conflict", [],
     ["Kashmir", "India", "Pakistan"],
     "The Kashmir conflict is a territorial dispute over the Kashmir region between India and "
     "Pakistan that began after the partition of India in 1947."),
    ("Dal_Lake", "Dal Lake", [],
     ["Srinagar", "Kashmir"],
     "Dal Lake is a lake in Srinagar, the summer capital of Jammu and Kashmir, famous for houseboats "
     "and floating gardens."),

    # Hertfordshire
    ("Knebworth", "Knebworth", ["Knebworth village"],
     ["Hertfordshire", "Knebworth_House", "Stevenage"],
     "Knebworth is a village and civil parish in Hertfordshire, England, south of Stevenage. The "
     "village has a railway station and a parish church."),
    ("Knebworth_House", "Knebworth House", ["Knebworth"],
     ["Knebworth", "Hertfordshire", "Edward_Bulwer-Lytton"],
     "Knebworth House is an English country house in Hertfordshire, the home of the Lytton family. "
     "The novelist Edward Bulwer-Lytton lived in the gothic house, whose park hosts concerts."),
    ("Hertfordshire", "Hertfordshire", ["Herts"],
     ["Stevenage", "St_Albans", "Knebworth", "London"],
     "Hertfordshire is a county in southern England north of London. Its towns include St Albans, "
     "Stevenage, Watford and the village of Knebworth."),
    ("Stevenage", "Stevenage", [],
     ["Hertfordshire", "Knebworth", "London"],
     "Stevenage is a town in Hertfordshire and the first new town designated after the Second World "
     "War. It lies north of London."),
    ("St_Albans", "St Albans", [],
     ["Hertfordshire", "London"],
     "St Albans is a cathedral city in Hertfordshire, England, built near the Roman town of "
     "Verulamium."),
    ("Edward_Bulwer-Lytton", "Edward Bulwer-Lytton", ["Bulwer-Lytton"],
     ["Knebworth_House"],
     "Edward Bulwer-Lytton was an English novelist and politician who wrote The Last Days of Pompeii "
     "and coined the phrase the pen is mightier than the sword. He lived at Knebworth House."),
    ("London", "London", [],
     ["River_Thames", "Buckingham_Palace", "Hertfordshire", "Elizabeth_II"],
     "London is the capital and largest city of England and the United Kingdom, standing on the River "
     "Thames. Landmarks include Buckingham Palace and the Tower of London."),
    ("River_Thames", "River Thames", ["Thames"],
     ["London"],
     "The River Thames flows through southern England including London to the North Sea."),

    # monarchy
    ("Elizabeth_II", "Elizabeth II", ["Queen Elizabeth", "Queen Elizabeth II"],
     ["Buckingham_Palace", "Prince_Philip", "Monarchy_of_New_Zealand", "Monarchy_of_Canada", "London",
      "Elizabeth_I"],
     "Elizabeth II was Queen of the United Kingdom and other Commonwealth realms from 1952 to 2022. "
     "Her coronation took place in Westminster Abbey in 1953. She married Prince Philip and lived at "
     "Buckingham Palace and Windsor Castle, and reigned longer than any other British monarch."),
    ("Elizabeth_I", "Elizabeth I", ["Queen Elizabeth", "Queen Elizabeth I"],
     ["Henry_VIII", "London"],
     "Elizabeth I was Queen of England and Ireland from 1558 until 1603, the last monarch of the Tudor "
     "dynasty and daughter of Henry VIII. Her reign saw the defeat of the Spanish Armada."),
    ("Henry_VIII", "Henry VIII", [],
     ["Elizabeth_I", "London"],
     "Henry VIII was King of England from 1509 until 1547, known for his six marriages and the break "
     "with the Roman Catholic Church."),
    ("Queen_Elizabeth_The_Queen_Mother", "Queen Elizabeth The Queen Mother",
     ["Queen Elizabeth", "Queen Mother"],
     ["Elizabeth_II", "George_VI"],
     "Queen Elizabeth The Queen Mother was the wife of King George VI and mother of Elizabeth II. She "
     "lived to the age of 101 and died in 2002."),
    ("George_VI", "George VI", [],
     ["Elizabeth_II", "Queen_Elizabeth_The_Queen_Mother", "Buckingham_Palace"],
     "George VI was King of the United Kingdom from 1936 until his death in 1952, succeeded by his "
     "daughter Elizabeth II."),
    ("RMS_Queen_Elizabeth", "RMS Queen Elizabeth", ["Queen Elizabeth"],
     ["Cunard_Line"],
     "RMS Queen Elizabeth was an ocean liner operated by the Cunard Line. The ship served as a troop "
     "ship in the Second World War and sailed the Atlantic between Southampton and New York."),
    ("Cunard_Line", "Cunard Line", ["Cunard"],
     ["RMS_Queen_Elizabeth"],
     "Cunard Line is a British cruise line based in Southampton operating ocean liners across the "
     "Atlantic."),
    ("Monarchy_of_New_Zealand", "Monarchy of New Zealand", [],
     ["Elizabeth_II", "New_Zealand"],
     "Queen Elizabeth II. Queen Elizabeth II was sovereign of New Zealand. Queen Elizabeth II."),
    ("Monarchy_of_Canada", "Monarchy of Canada", [],
     ["Elizabeth_II"],
     "The monarchy of Canada is the form of government in which a hereditary sovereign is head of state "
     "of Canada, exercised through the Governor General."),
    ("New_Zealand", "New Zealand", ["Aotearoa"],
     ["Monarchy_of_New_Zealand"],
     "New Zealand is an island country in the southwestern Pacific Ocean with a parliament in "
     "Wellington."),
    ("Buckingham_Palace", "Buckingham Palace", [],
     ["London", "Elizabeth_II"],
     "Buckingham Palace is the London residence and administrative headquarters of the British "
     "monarch, in the City of Westminster."),
    ("Prince_Philip", "Prince Philip", ["Duke of Edinburgh"],
     ["Elizabeth_II", "Buckingham_Palace"],
     "Prince Philip, Duke of Edinburgh, was the husband of Queen Elizabeth II. He founded the Duke of "
     "Edinburgh award for young people."),

    # French cinema
    ("Les_pauvres_riches", "Les pauvres riches", [],
     ["Paris", "Marcel_Carne"],
     "Les pauvres riches is a French comedy film shot in Paris about a ruined family who pretend to "
     "remain rich."),
    ("Les_Contrebandiers", "Les Contrebandiers", [],
     ["Paris"],
     "Les Contrebandiers is a French opera about smugglers crossing the mountains, first staged in "
     "Paris in the nineteenth century."),
    ("Les_Miserables", "Les Miserables", [],
     ["Victor_Hugo", "Paris"],
     "Les Miserables is a French novel by Victor Hugo published in 1862 following the convict Jean "
     "Valjean in Paris."),
    ("Victor_Hugo", "Victor Hugo", ["Hugo"],
     ["Les_Miserables", "Paris"],
     "Victor Hugo was a French romantic writer and politician, author of Les Miserables and The "
     "Hunchback of Notre-Dame."),
    ("Hugo_(film)", "Hugo (film)", ["Hugo"],
     ["Martin_Scorsese", "Paris"],
     "Hugo is a 2011 adventure film directed by Martin Scorsese about an orphan boy living in a Paris "
     "railway station who repairs an automaton."),
    ("Martin_Scorsese", "Martin Scorsese", ["Scorsese"],
     ["Hugo_(film)"],
     "Martin Scorsese is an American film director whose films include Taxi Driver, Goodfellas and "
     "Hugo."),
    ("Marcel_Carne", "Marcel Carne", ["Carne"],
     ["Jean_Gabin", "Paris"],
     "Marcel Carne was a French film director of poetic realism whose films include Les Enfants du "
     "Paradis and Le Jour se Leve with Jean Gabin."),
    ("Jean_Gabin", "Jean Gabin", ["Gabin"],
     ["Marcel_Carne", "Paris"],
     "Jean Gabin was a French actor who starred in Le Jour se Leve and La Grande Illusion."),
    ("Paris", "Paris", [],
     ["France", "Les_Miserables", "Victor_Hugo"],
     "Paris is the capital and most populous city of France, on the river Seine. Paris is a center of "
     "art, fashion and cinema with the Eiffel Tower and the Louvre."),
    ("France", "France", [],
     ["Paris"],
     "France is a country in Western Europe with its capital at Paris."),
    ("Paris_Hilton", "Paris Hilton", ["Paris"],
     ["Hilton_Hotels"],
     "Paris Hilton is an American media personality, businesswoman and socialite, a great "
     "granddaughter of Conrad Hilton, founder of Hilton Hotels."),
    ("Hilton_Hotels", "Hilton Hotels", ["Hilton"],
     ["Paris_Hilton"],
     "Hilton Hotels and Resorts is a global brand of full service hotels founded by Conrad Hilton in "
     "Texas."),
    ("Paris,_Texas", "Paris, Texas", ["Paris"],
     ["Texas"],
     "Paris is a city in Lamar County, Texas, United States, northeast of Dallas. A replica of the "
     "Eiffel Tower topped with a cowboy hat stands in the town."),
    ("Texas", "Texas", [],
     ["Paris,_Texas"],
     "Texas is the second largest state of the United States, with Austin as capital and Dallas and "
     "Houston as large cities."),

    # technology
    ("Larry_Page", "Larry Page", [],
     ["Google", "Sergey_Brin", "Stanford_University"],
     "Larry Page is an American computer scientist who co-founded Google with Sergey Brin while both "
     "were PhD students at Stanford University. Page invented the PageRank algorithm for web search."),
    ("Sergey_Brin", "Sergey Brin", ["Brin"],
     ["Google", "Larry_Page", "Stanford_University"],
     "Sergey Brin is an American computer scientist who co-founded the search engine Google with "
     "Larry Page at Stanford University."),
    ("Google", "Google", [],
     ["Larry_Page", "Sergey_Brin", "Stanford_University"],
     "Google is an American technology company specializing in web search, online advertising, cloud "
     "computing and software, founded by Larry Page and Sergey Brin in 1998."),
    ("Stanford_University", "Stanford University", ["Stanford"],
     ["Google"],
     "Stanford University is a private research university in Stanford, California, near Palo Alto "
     "in Silicon Valley."),
    ("Apple_Inc", "Apple Inc.", ["Apple"],
     ["Steve_Jobs", "Steve_Wozniak", "Cupertino"],
     "Apple Inc. is an American technology company headquartered in Cupertino, California, that "
     "designs the iPhone, the Mac computer and the iPad. Apple was founded by Steve Jobs and Steve "
     "Wozniak in 1976."),
    ("Steve_Jobs", "Steve Jobs", ["Jobs"],
     ["Apple_Inc", "Steve_Wozniak"],
     "Steve Jobs was an American businessman and co-founder of Apple, who introduced the Macintosh "
     "computer, the iPod and the iPhone."),
    ("Steve_Wozniak", "Steve Wozniak", ["Wozniak", "Woz"],
     ["Apple_Inc", "Steve_Jobs"],
     "Steve Wozniak is an American electronics engineer who designed the Apple I and Apple II "
     "computers and co-founded Apple with Steve Jobs."),
    ("Cupertino", "Cupertino", [],
     ["Apple_Inc"],
     "Cupertino is a city in Santa Clara County, California, in Silicon Valley and the headquarters "
     "of Apple."),
    ("Apple", "Apple", ["apple fruit"],
     [],
     "An apple is an edible fruit produced by the apple tree, Malus domestica. Apple trees are grown in "
     "orchards worldwide and the fruit is eaten fresh or pressed for cider and juice."),

    # Beatles
    ("The_Beatles", "The Beatles", ["Beatles"],
     ["John_Lennon", "Paul_McCartney", "Apple_Records", "Abbey_Road", "Liverpool"],
     "The Beatles were an English rock band formed in Liverpool in 1960 with John Lennon, Paul "
     "McCartney, George Harrison and Ringo Starr. They founded the label Apple Records and recorded "
     "Abbey Road."),
    ("Apple_Records", "Apple Records", ["Apple"],
     ["The_Beatles", "John_Lennon", "Paul_McCartney"],
     "Apple Records is a record label founded by the Beatles in London in 1968 as part of Apple Corps. "
     "The label released records by the Beatles, Mary Hopkin and Badfinger."),
    ("John_Lennon", "John Lennon", ["Lennon"],
     ["The_Beatles", "Paul_McCartney", "Liverpool"],
     "John Lennon was an English singer and songwriter, co-founder of the Beatles with Paul McCartney."),
    ("Paul_McCartney", "Paul McCartney", ["McCartney"],
     ["The_Beatles", "John_Lennon", "Liverpool"],
     "Paul McCartney is an English singer, songwriter and bassist of the Beatles, born in Liverpool."),
    ("Abbey_Road", "Abbey Road", [],
     ["The_Beatles"],
     "Abbey Road is the eleventh studio album by the Beatles, named after the London street with the "
     "recording studio."),
    ("Liverpool", "Liverpool", [],
     ["The_Beatles", "Liverpool_F.C."],
     "Liverpool is a port city in northwest England on the Mersey estuary, home of the Beatles and "
     "Liverpool football club."),
    ("Liverpool_F.C.", "Liverpool F.C.", ["Liverpool"],
     ["Liverpool", "Premier_League"],
     "Liverpool Football Club is a professional football club based in Liverpool that plays at Anfield "
     "in the Premier League and has won the European Cup six times."),
    ("Premier_League", "Premier League", [],
     ["Liverpool_F.C."],
     "The Premier League is the top level of the English football league system with twenty clubs."),

    # sports and Middle East
    ("Michael_Jordan", "Michael Jordan", ["Jordan"],
     ["Chicago_Bulls", "NBA", "Scottie_Pippen"],
     "Michael Jordan is an American former professional basketball player who won six NBA "
     "championships with the Chicago Bulls alongside Scottie Pippen. Jordan is widely regarded as the "
     "greatest basketball player of all time."),
    ("Chicago_Bulls", "Chicago Bulls", ["Bulls"],
     ["Michael_Jordan", "NBA", "Scottie_Pippen"],
     "The Chicago Bulls are an American professional basketball team in the NBA that won six "
     "championships in the 1990s led by Michael Jordan and Scottie Pippen."),
    ("Scottie_Pippen", "Scottie Pippen", ["Pippen"],
     ["Michael_Jordan", "Chicago_Bulls", "NBA"],
     "Scottie Pippen is an American former basketball forward who won six NBA titles with Michael "
     "Jordan on the Chicago Bulls."),
    ("NBA", "National Basketball Association", ["NBA"],
     ["Chicago_Bulls", "Michael_Jordan"],
     "The National Basketball Association is the professional basketball league of North America with "
     "thirty teams."),
    ("SSV_Ulm_1846", "SSV Ulm 1846", ["Ulm", "SSV Ulm"],
     ["Bundesliga"],
     "SSV Ulm 1846 is a German football club from the city of Ulm that played one season in the "
     "Bundesliga and plays at the Donaustadion."),
    ("Bundesliga", "Bundesliga", [],
     ["SSV_Ulm_1846"],
     "The Bundesliga is the top professional football league in Germany, founded in 1963."),
    ("Jordan", "Jordan", ["Hashemite Kingdom of Jordan"],
     ["Amman", "Jordan_River", "Dead_Sea", "Petra"],
     "Jordan is an Arab country in Western Asia on the east bank of the Jordan River. Its capital is "
     "Amman and it borders the Dead Sea, Saudi Arabia, Iraq, Syria and Israel. The ancient city of "
     "Petra lies in southern Jordan."),
    ("Amman", "Amman", [],
     ["Jordan"],
     "Amman is the capital and largest city of Jordan, built on seven hills."),
    ("Jordan_River", "Jordan River", ["River Jordan"],
     ["Jordan", "Dead_Sea"],
     "The Jordan River is a river in the Middle East that flows from the Sea of Galilee south to the "
     "Dead Sea."),
    ("Dead_Sea", "Dead Sea", [],
     ["Jordan", "Jordan_River"],
     "The Dead Sea is a salt lake bordered by Jordan to the east and Israel to the west, the lowest "
     "land point on Earth."),
    ("Petra", "Petra", [],
     ["Jordan"],
     "Petra is an archaeological city in southern Jordan famous for rock cut architecture built by "
     "the Nabataeans."),
]

# (query_id, type, name, gold, document)
QUERIES = [
    ("Q01", "person", "Einstein", "Albert_Einstein",
     "Einstein was born in Ulm and developed the theory of relativity, which earned fame long before "
     "the Nobel Prize in Physics."),
    ("Q02", "person", "Einstein", "Hans_Albert_Einstein",
     "Hans Albert Einstein taught hydraulic engineering at Berkeley and studied sediment transport in "
     "rivers, a field far from the relativity of his father."),
    ("Q03", "geo-political", "Ulm", "Ulm",
     "Tourists in Ulm climb the steeple of Ulm Minster for views over the Danube."),
    ("Q04", "topic", "Ulm", "SSV_Ulm_1846",
     "SSV Ulm drew two all at the Donaustadion in front of a small football crowd hoping to return to "
     "the Bundesliga."),
    ("Q05", "topic", "Kashmir", "Kashmir_(song)",
     "Led Zeppelin closed the night with Kashmir, Jimmy Page playing the riff in DADGAD tuning while "
     "Robert Plant sang."),
    ("Q06", "geo-political", "Kashmir", "Kashmir",
     "Heavy snow cut the highway to Srinagar and villages across Kashmir lost power, officials in Jammu "
     "said."),
    ("Q07", "topic", "Knebworth", "Knebworth_Festival_1979",
     "Fans still remember Led Zeppelin at Knebworth, when Jimmy Page played to a crowd of 100,000 in "
     "August 1979."),
    ("Q08", "geo-political", "Knebworth", "Knebworth",
     "Commuters at the Knebworth railway station face delays as works continue on the line to "
     "Stevenage in Hertfordshire."),
    ("Q09", "topic", "Les Paul", "Gibson_Les_Paul",
     "The auction featured a sunburst Les Paul electric guitar that Jimmy Page played on stage with Led "
     "Zeppelin."),
    ("Q10", "person", "Les Paul", "Les_Paul",
     "Les Paul and Mary Ford topped the charts with How High the Moon, recorded with his multitrack "
     "invention."),
    ("Q11", "person", "Queen Elizabeth", "Elizabeth_II",
     "Queen Elizabeth II attended the state opening of parliament with Prince Philip before returning to "
     "Buckingham Palace."),
    ("Q12", "person", "Queen Elizabeth", "Elizabeth_I",
     "Queen Elizabeth I watched the defeat of the Spanish Armada, securing the Tudor throne that Henry "
     "VIII had left her."),
    ("Q13", "topic", "Queen Elizabeth", "RMS_Queen_Elizabeth",
     "The liner Queen Elizabeth left Southampton for New York on her Cunard Atlantic crossing."),
    ("Q14", "person", "Paris", "Paris_Hilton",
     "Paris Hilton, the socialite and granddaughter of Conrad Hilton, launched a new perfume."),
    ("Q15", "geo-political", "Paris", "Paris",
     "Crowds gathered along the Seine in Paris, France, to watch fireworks over the Eiffel Tower."),
    ("Q16", "geo-political", "Paris", "Paris,_Texas",
     "The town of Paris in Lamar County, Texas, repainted its Eiffel Tower replica and the cowboy hat "
     "on top."),
    ("Q17", "person", "Hugo", "Victor_Hugo",
     "A new edition of Les Miserables by Victor Hugo revives the story of Jean Valjean."),
    ("Q18", "topic", "Hugo", "Hugo_(film)",
     "Martin Scorsese said Hugo, his film about an orphan in a railway station who repairs an "
     "automaton, was made for his daughter."),
    ("Q19", "topic", "Apple", "Apple_Inc",
     "Apple unveiled a new iPhone and Mac at its Cupertino headquarters, recalling how Steve Jobs "
     "introduced the first iPhone."),
    ("Q20", "topic", "Apple", "Apple",
     "This autumn the apple harvest was poor, orchards reported, and fewer apple trees produced fruit "
     "for cider and juice."),
    ("Q21", "topic", "Apple", "Apple_Records",
     "Apple released a remastered Beatles album, and McCartney recalled founding Apple Records in "
     "London."),
    ("Q22", "person", "Jordan", "Michael_Jordan",
     "Jordan scored 38 points as the Chicago Bulls beat the Jazz, with Scottie Pippen adding 20 in the "
     "NBA finals."),
    ("Q23", "geo-political", "Jordan", "Jordan",
     "Jordan reopened its border crossing near the Dead Sea and tourism to Petra and Amman recovered."),
    ("Q24", "person", "Planck", "Max_Planck",
     "Max Planck introduced energy quanta, founding quantum theory and winning the Nobel Prize in "
     "Physics."),
    ("Q25", "topic", "Planck", "Planck_(spacecraft)",
     "Planck, the European Space Agency satellite, mapped the cosmic microwave background with "
     "unprecedented precision."),
    ("Q26", "geo-political", "Liverpool", "Liverpool",
     "Liverpool celebrated the Beatles with a new museum on the Mersey waterfront."),
    ("Q27", "topic", "Liverpool", "Liverpool_F.C.",
     "Liverpool won at Anfield to go top of the Premier League, football fans cheering late into the "
     "night."),
    ("Q28", "person", "Mileva", "Mileva_Maric",
     "Mileva Maric studied physics at ETH Zurich, where she met her future husband."),
    ("Q29", "person", "Larry Page", "Larry_Page",
     "Larry Page described how the PageRank algorithm grew out of his Stanford PhD work with Sergey "
     "Brin."),
    ("Q30", "person", "Bohr", "Niels_Bohr",
     "Niels Bohr proposed a model of atomic structure and debated quantum theory with Einstein for "
     "decades."),
    # wildcard queries: the referenced entity is not in the KB
    ("Q31", "person", "Maria Kowalczyk", "NIL",
     "Maria Kowalczyk opened a small bakery selling rye bread and poppy seed rolls to neighbors."),
    ("Q32", "person", "Tomas Brenner", "NIL",
     "Tomas Brenner, a retired plumber, restored a wooden sailboat in his garage over six winters."),
    ("Q33", "unknown", "Vellmar Works", "NIL",
     "Vellmar Works announced quarterly earnings below forecasts and plans to cut warehouse staff."),
    ("Q34", "person", "Ada Okafor", "NIL",
     "Ada Okafor won the regional chess championship after a tense endgame lasting five hours."),
    ("Q35", "geo-political", "Lower Brinkton", "NIL",
     "Residents of Lower Brinkton voted to repair the footbridge damaged by spring floods."),
    ("Q36", "person", "Sam Hartley", "NIL",
     "Sam Hartley, a teacher from London, published a guide to birdwatching along the River Thames."),
    ("Q37", "person", "Rina Shah", "NIL",
     "Rina Shah trekked through Ladakh and photographed monasteries in the Himalayas for her travel "
     "blog."),
    ("Q38", "unknown", "Orbit Nine", "NIL",
     "Orbit Nine, a startup from Stanford, released a budget phone app to compete with Google."),
    ("Q39", "person", "Pete Lorimer", "NIL",
     "Pete Lorimer covered Stairway to Heaven at a pub gig and played a battered Les Paul copy."),
    ("Q40", "person", "Greta Holm", "NIL",
     "Greta Holm ran the Vienna marathon and later cycled along the Danube toward the Black Sea."),
]


def main(out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    ids = [e[0] for e in ENTITIES]
    assert len(ids) == len(set(ids)) == 100, len(ids)
    with (out / "kb.jsonl").open("w", encoding="utf-8") as fh:
        for eid, name, aliases, links, text in ENTITIES:
            row = {"id": eid, "name": name, "aliases": aliases, "text": text, "links": links}
            fh.write(json.dumps(row, ensure_ascii=False) + "\n")
    assert len(QUERIES) == 40
    with (out / "queries.jsonl").open("w", encoding="utf-8") as fh:
        for qid, qtype, name, _, doc in QUERIES:
            fh.write(json.dumps({"query_id": qid, "type": qtype, "name": name, "doc": doc}) + "\n")
    with (out / "gold.tsv").open("w", encoding="utf-8") as fh:
        for qid, _, _, gold, _ in QUERIES:
            assert gold == "NIL" or gold in ids, gold
            fh.write(f"{qid}\t{gold}\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures/minitac")
