# Ficheiro intencionalmente vazio.
# Transforma 'algebras' num sub-pacote de 'aug_cohomology'.
