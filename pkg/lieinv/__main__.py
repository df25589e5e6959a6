# lieinv/__main__.py

from lieinv.main import main

main()
