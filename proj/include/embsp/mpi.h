/*
 * Copyright 2026 The embsp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* MPI-compatible facade.  A message-passing program restricted to the calls
 * below compiles against embsp unmodified and runs with one rank per virtual
 * processor: MPI_Comm_size reports v (the virtual processor count) and
 * MPI_Comm_rank the caller's global VP id.
 *
 * Do not link a real MPI implementation into the same binary.
 */

#ifndef EMBSP_MPI_H
#define EMBSP_MPI_H

#include <stdint.h>
#include <stdlib.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef int MPI_Comm;
#define MPI_COMM_WORLD 0

typedef int MPI_Datatype;
#define MPI_BYTE 0
#define MPI_CHAR 1
#define MPI_INT32_T 2
#define MPI_UINT32_T 3
#define MPI_INT64_T 4
#define MPI_UINT64_T 5
#define MPI_DOUBLE 6
#define MPI_INT MPI_INT32_T
#define MPI_UNSIGNED MPI_UINT32_T
#define MPI_LONG_LONG MPI_INT64_T
#define MPI_UNSIGNED_LONG_LONG MPI_UINT64_T

typedef int MPI_Op;
#define MPI_SUM 0
#define MPI_MIN 1
#define MPI_MAX 2

#define MPI_SUCCESS 0
#define MPI_ERR_OTHER 1
#define MPI_ERR_ARG 2
#define MPI_ERR_UNSUPPORTED 3

int MPI_Init(int* argc, char*** argv);
int MPI_Finalize(void);
int MPI_Abort(MPI_Comm comm, int errorcode);
int MPI_Comm_rank(MPI_Comm comm, int* rank);
int MPI_Comm_size(MPI_Comm comm, int* size);
double MPI_Wtime(void);

int MPI_Barrier(MPI_Comm comm);
int MPI_Bcast(void* buffer, int count, MPI_Datatype datatype, int root,
              MPI_Comm comm);
int MPI_Gather(const void* sendbuf, int sendcount, MPI_Datatype sendtype,
               void* recvbuf, int recvcount, MPI_Datatype recvtype, int root,
               MPI_Comm comm);
int MPI_Gatherv(const void* sendbuf, int sendcount, MPI_Datatype sendtype,
                void* recvbuf, const int* recvcounts, const int* displs,
                MPI_Datatype recvtype, int root, MPI_Comm comm);
int MPI_Scatter(const void* sendbuf, int sendcount, MPI_Datatype sendtype,
                void* recvbuf, int recvcount, MPI_Datatype recvtype, int root,
                MPI_Comm comm);
int MPI_Allgather(const void* sendbuf, int sendcount, MPI_Datatype sendtype,
                  void* recvbuf, int recvcount, MPI_Datatype recvtype,
                  MPI_Comm comm);
int MPI_Allgatherv(const void* sendbuf, int sendcount, MPI_Datatype sendtype,
                   void* recvbuf, const int* recvcounts, const int* displs,
                   MPI_Datatype recvtype, MPI_Comm comm);
int MPI_Alltoall(const void* sendbuf, int sendcount, MPI_Datatype sendtype,
                 void* recvbuf, int recvcount, MPI_Datatype recvtype,
                 MPI_Comm comm);
int MPI_Alltoallv(const void* sendbuf, const int* sendcounts,
                  const int* sdispls, MPI_Datatype sendtype, void* recvbuf,
                  const int* recvcounts, const int* rdispls,
                  MPI_Datatype recvtype, MPI_Comm comm);
int MPI_Reduce(const void* sendbuf, void* recvbuf, int count,
               MPI_Datatype datatype, MPI_Op op, int root, MPI_Comm comm);
int MPI_Allreduce(const void* sendbuf, void* recvbuf, int count,
                  MPI_Datatype datatype, MPI_Op op, MPI_Comm comm);

/* Registration hook for user-defined reduction operators.  The operator must
 * be commutative (commute != 1 is rejected). */
typedef void (*MPI_User_function)(const void* invec, void* inoutvec,
                                  uint64_t count, MPI_Datatype datatype);
int MPI_Op_create(MPI_User_function fn, int commute, MPI_Op* op);

/* Not implemented; always fails with a named error. */
int MPI_Comm_split(MPI_Comm comm, int color, int key, MPI_Comm* newcomm);

/* Context allocation.  Inside a VP these draw from the VP's mu-byte pool;
 * outside they fall through to the system allocator.  embsp_free dispatches
 * on the pointer's origin. */
void* embsp_malloc(size_t size);
void* embsp_realloc(void* ptr, size_t size);
void embsp_free(void* ptr);

/* Opt-in interposition: compile VP program sources with
 * -DEMBSP_WRAP_ALLOC after including this header to route the standard
 * allocation calls into the context pool. */
#ifdef EMBSP_WRAP_ALLOC
#define malloc(sz) embsp_malloc(sz)
#define realloc(p, sz) embsp_realloc(p, sz)
#define free(p) embsp_free(p)
#endif

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EMBSP_MPI_H */
