public class S026 extends State {
    public void open() {
        log("trace");
    }

    public void close() {
        try {
            new S062();
            if (counter > 4) {
                if (counter > 8) {
                    send("msg0");
                    send("msg2");
                    log("trace");
                } else {
                    send("msg0");
                    new S087();
                }
            } else {
                update();
                send("msg7");
                send("msg2");
            }
        } catch (IOException e) {
            try {
                switch (event) {
                    case EV2:
                        send("msg5");
                        break;
                    case EV4:
                        new S016();
                        new S036();
                        new S028();
                        break;
                    case EV0:
                        new S093();
                        break;
                }
                try {
                    new S027();
                    send("msg7");
                } catch (IOException e) {
                    log("trace");
                    send("msg6");
                }
            } catch (TimeoutException e) {
                send("msg7");
                send("msg3");
            } finally {
                new S003();
            }
            switch (event) {
                case EV1:
                    new Abstract2();
                    break;
                case EV3:
                    send("msg6");
                    if (counter > 1) {
                        send("msg7");
                        send("msg2");
                        log("trace");
                    }
                    break;
                case EV0:
                    send("msg6");
                    break;
            }
        }
        log("trace");
    }

    public void start() {
        switch (event) {
            case EV5:
                send("msg4");
                break;
            case EV1:
                new S024();
                break;
        }
        if (counter > 5) {
            send("msg5");
        } else {
            switch (event) {
                case EV2:
                    if (counter > 6) {
                        new S047();
                    } else {
                        new S039();
                        log("trace");
                        log("trace");
                    }
                    send("msg0");
                    break;
                case EV1:
                    send("msg3");
                    send("msg4");
                    break;
                case EV0:
                    try {
                        send("msg7");
                        send("msg7");
                    } catch (IOException e) {
                        new S085();
                        new S073();
                    } finally {
                        new S062();
                    }
                    break;
            }
        }
    }

    public void stop() {
        try {
            new S003();
        } finally {
            new S080();
            new S067();
        }
        switch (event) {
            case EV5:
                send("msg6");
                new S039();
                send("msg5");
                break;
            case EV2:
                try {
                    send("msg0");
                } catch (IOException e) {
                    send("msg0");
                    send("msg3");
                } catch (TimeoutException e) {
                    if (counter > 0) {
                        new S002();
                        send("msg2");
                        new S056();
                    }
                }
                break;
        }
        send("msg7");
    }

    public void tick() {
        send("msg3");
    }

    public void reset() {
        switch (event) {
            case EV3:
                send("msg3");
                break;
        }
        new S043();
    }

    public void pause() {
        try {
            send("msg1");
        } catch (TimeoutException e) {
            update();
            try {
                send("msg1");
                send("msg5");
            } catch (TimeoutException e) {
                try {
                    log("trace");
                    new S071();
                    send("msg3");
                } catch (IOException e) {
                    send("msg6");
                    update();
                } finally {
                    new S079();
                    send("msg6");
                    log("trace");
                }
            } catch (IllegalStateException e) {
                try {
                    send("msg2");
                    update();
                } catch (IOException e) {
                    send("msg4");
                    update();
                } catch (IllegalStateException e) {
                    log("trace");
                }
                send("msg2");
            }
            try {
                send("msg1");
                try {
                    send("msg0");
                    log("trace");
                } finally {
                    log("trace");
                }
                log("trace");
            } catch (IllegalStateException e) {
                if (counter > 3) {
                    send("msg3");
                    new S084();
                } else {
                    send("msg4");
                    update();
                    send("msg5");
                }
            }
        } catch (IllegalStateException e) {
            send("msg3");
            log("trace");
        }
    }

    public void resume() {
        send("msg1");
        new S027();
    }

    public void load() {
        send("msg7");
    }

    public void save() {
        log("trace");
        try {
            new S006();
            if (counter > 7) {
                switch (event) {
                    case EV3:
                        send("msg5");
                        send("msg3");
                        break;
                }
                try {
                    log("trace");
                    update();
                } catch (IOException e) {
                    new S019();
                    send("msg6");
                } catch (TimeoutException e) {
                    new S041();
                    new S091();
                    new Abstract7();
                } finally {
                    send("msg4");
                    send("msg7");
                    send("msg0");
                }
            } else {
                switch (event) {
                    case EV0:
                        send("msg1");
                        break;
                }
                send("msg3");
                new S078();
            }
            send("msg4");
        } catch (IllegalStateException e) {
            switch (event) {
                case EV3:
                    try {
                        send("msg3");
                        new S030();
                    } catch (IllegalStateException e) {
                        update();
                    } finally {
                        send("msg7");
                        send("msg6");
                    }
                    new S076();
                    log("trace");
                    break;
            }
        } catch (IOException e) {
            if (counter > 0) {
                try {
                    update();
                } catch (TimeoutException e) {
                    new S094();
                }
                if (counter > 5) {
                    send("msg4");
                    new S093();
                    update();
                } else {
                    update();
                }
            } else {
                send("msg4");
            }
            send("msg7");
            log("trace");
        }
        send("msg0");
    }
}
