# Ficheiro intencionalmente vazio.
# Transforma 'cohomology' num sub-pacote de 'aug_cohomology'.
